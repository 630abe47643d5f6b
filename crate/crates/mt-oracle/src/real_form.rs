//! Vogan diagrams: a painting of the simple roots plus a diagram
//! automorphism of order at most two. Inner forms (trivial automorphism) are
//! exactly the real forms with a compact maximal torus; only those admit the
//! compact/noncompact root classification used everywhere downstream.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::root_datum::{Family, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootCompactness {
    Compact,
    Noncompact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganDiagram {
    rs: RootSystem,
    painted: Vec<bool>,
    /// permutation of simple-root indices (0-based), identity for inner forms
    autom: Vec<usize>,
}

impl VoganDiagram {
    /// `painted` and `automorphism` use 1-based simple-root indices
    /// (alpha_1 ... alpha_rank).
    pub fn new(rs: RootSystem, painted: &[usize], automorphism: Option<&[usize]>) -> Result<VoganDiagram> {
        let n = rs.rank();
        let mut paint = vec![false; n];
        for &p in painted {
            if p == 0 || p > n {
                return Err(Error::InvalidDiagram(format!(
                    "painted index {p} out of range 1..={n}"
                )));
            }
            paint[p - 1] = true;
        }

        let autom: Vec<usize> = match automorphism {
            None => (0..n).collect(),
            Some(perm) => {
                if perm.len() != n {
                    return Err(Error::InvalidDiagram(format!(
                        "automorphism must list {n} images, got {}",
                        perm.len()
                    )));
                }
                let mut seen = vec![false; n];
                let mut sigma = Vec::with_capacity(n);
                for &img in perm {
                    if img == 0 || img > n {
                        return Err(Error::InvalidDiagram(format!(
                            "automorphism image {img} out of range 1..={n}"
                        )));
                    }
                    if seen[img - 1] {
                        return Err(Error::InvalidDiagram("automorphism is not a permutation".into()));
                    }
                    seen[img - 1] = true;
                    sigma.push(img - 1);
                }
                sigma
            }
        };

        // order divides 2
        for i in 0..n {
            if autom[autom[i]] != i {
                return Err(Error::InvalidDiagram(
                    "diagram automorphism must have order 1 or 2".into(),
                ));
            }
        }

        // must preserve the Cartan matrix
        let cartan = cartan_matrix(&rs);
        for i in 0..n {
            for j in 0..n {
                if cartan[autom[i]][autom[j]] != cartan[i][j] {
                    return Err(Error::InvalidDiagram(
                        "permutation does not preserve the Dynkin diagram".into(),
                    ));
                }
            }
        }

        // painting must be stable under the automorphism
        for i in 0..n {
            if paint[i] != paint[autom[i]] {
                return Err(Error::InvalidDiagram(
                    "painting is not stable under the diagram automorphism".into(),
                ));
            }
        }

        Ok(VoganDiagram { rs, painted: paint, autom })
    }

    pub fn inner(rs: RootSystem, painted: &[usize]) -> Result<VoganDiagram> {
        VoganDiagram::new(rs, painted, None)
    }

    pub fn compact_form(rs: RootSystem) -> VoganDiagram {
        let n = rs.rank();
        VoganDiagram { rs, painted: vec![false; n], autom: (0..n).collect() }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn painted(&self) -> &[bool] {
        &self.painted
    }

    /// 1-based indices of the painted simple roots.
    pub fn painted_indices(&self) -> Vec<usize> {
        self.painted
            .iter()
            .enumerate()
            .filter_map(|(i, &p)| p.then_some(i + 1))
            .collect()
    }

    pub fn automorphism(&self) -> &[usize] {
        &self.autom
    }

    pub fn is_inner(&self) -> bool {
        self.autom.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// A compact maximal torus exists precisely for inner forms.
    pub fn has_compact_maximal_torus(&self) -> bool {
        self.is_inner()
    }

    fn require_inner(&self) -> Result<()> {
        if self.is_inner() {
            Ok(())
        } else {
            Err(Error::NoCompactMaximalTorus)
        }
    }

    /// Compact/noncompact classification of a root: noncompact iff the sum
    /// of its coefficients over the painted simple roots is odd. Defined
    /// only for inner forms.
    pub fn classify_root(&self, root: &[i64]) -> Result<RootCompactness> {
        self.require_inner()?;
        let coeffs = self.rs.expand_in_simple(root)?;
        Ok(self.classify_coeffs(&coeffs))
    }

    /// Same classification from precomputed simple-root coefficients.
    pub fn classify_coeffs(&self, coeffs: &[i64]) -> RootCompactness {
        let painted_sum: i64 = coeffs
            .iter()
            .zip(&self.painted)
            .filter_map(|(&c, &p)| p.then_some(c))
            .sum();
        if painted_sum.rem_euclid(2) == 1 {
            RootCompactness::Noncompact
        } else {
            RootCompactness::Compact
        }
    }

    /// Noncompact-root indicator for every root, aligned with `roots()`.
    pub fn noncompact_flags(&self) -> Result<Vec<bool>> {
        self.require_inner()?;
        Ok((0..self.rs.roots().len())
            .map(|i| self.classify_coeffs(self.rs.simple_coords(i)) == RootCompactness::Noncompact)
            .collect())
    }

    /// Real-form labels: `so(a,b)` (a+b even: type D with the parity of a,b
    /// deciding inner/non-inner; a+b odd: type B), `so*(2n)`, and
    /// `compact(Xn)` for any classical family.
    pub fn from_label(label: &str) -> Result<VoganDiagram> {
        let t: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(args) = t.strip_prefix("so*(").and_then(|r| r.strip_suffix(')')) {
            let m: usize = args
                .parse()
                .map_err(|_| Error::Parse(format!("bad so* argument `{args}`")))?;
            if m % 2 != 0 || m < 6 {
                return Err(Error::Parse(format!("so*({m}): argument must be even and >= 6")));
            }
            let n = m / 2;
            let rs = RootSystem::new(Family::D, n)?;
            return VoganDiagram::inner(rs, &[n]);
        }
        if let Some(args) = t.strip_prefix("so(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!("so(...) needs two arguments, got `{args}`")));
            }
            let a: usize = parts[0].parse().map_err(|_| Error::Parse(format!("bad integer `{}`", parts[0])))?;
            let b: usize = parts[1].parse().map_err(|_| Error::Parse(format!("bad integer `{}`", parts[1])))?;
            return so_label(a, b);
        }
        if let Some(args) = t.strip_prefix("compact(").and_then(|r| r.strip_suffix(')')) {
            let args = args.replace(',', "");
            if args.is_empty() {
                return Err(Error::Parse("compact(...) needs a family and rank".into()));
            }
            let family = Family::parse(&args[..1])?;
            let rank: usize = args[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in `{t}`")))?;
            let rs = RootSystem::new(family, rank)?;
            return Ok(VoganDiagram::compact_form(rs));
        }
        Err(Error::Parse(format!(
            "unrecognised real-form label `{label}` (expected so(a,b), so*(2n) or compact(Xn))"
        )))
    }
}

fn so_label(a: usize, b: usize) -> Result<VoganDiagram> {
    let total = a + b;
    if total % 2 == 0 {
        let n = total / 2;
        let rs = RootSystem::new(Family::D, n).map_err(|_| {
            Error::Parse(format!("so({a},{b}): needs a+b >= 6 for type D"))
        })?;
        if a % 2 == 0 {
            // both even: inner form, paint alpha_p for p = min(a,b)/2
            let p = a.min(b) / 2;
            let painted: Vec<usize> = if p == 0 { vec![] } else { vec![p] };
            VoganDiagram::inner(rs, &painted)
        } else {
            // both odd: non-inner form, swap the fork nodes
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.swap(n - 2, n - 1);
            let p = (a.min(b) - 1) / 2;
            let painted: Vec<usize> = if p == 0 { vec![] } else { vec![p] };
            VoganDiagram::new(rs, &painted, Some(&perm))
        }
    } else {
        // odd total: type B, always inner
        let n = (total - 1) / 2;
        let rs = RootSystem::new(Family::B, n).map_err(|_| {
            Error::Parse(format!("so({a},{b}): needs a+b >= 5 for type B"))
        })?;
        let even = if a % 2 == 0 { a } else { b };
        let p = even / 2;
        let painted: Vec<usize> = if p == 0 { vec![] } else { vec![p] };
        VoganDiagram::inner(rs, &painted)
    }
}

fn cartan_matrix(rs: &RootSystem) -> Vec<Vec<i64>> {
    let simple = rs.simple_roots();
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let co = rs.coroot(b);
                    a.iter().zip(&co).map(|(x, y)| x * y).sum()
                })
                .collect()
        })
        .collect()
}

/// Distinct painted subsets (as sorted 1-based index sets) of a root system,
/// useful for exhaustive scans in tests.
pub fn all_paintings(rank: usize) -> Vec<Vec<usize>> {
    (0..(1usize << rank))
        .map(|mask| (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

#[allow(dead_code)]
fn painted_set(d: &VoganDiagram) -> BTreeSet<usize> {
    d.painted_indices().into_iter().collect()
}
