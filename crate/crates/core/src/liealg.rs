//! Finite-dimensional Lie algebras via structure constants: brackets,
//! Jacobi checking, r-matrices, cobrackets, dual algebras, and the double of
//! `ax+b` as an explicit verified table.

use crate::report::VerificationReport;
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Lie algebra presented by basis labels and structure constants
/// `[X_i, X_j] = sum_k c^k_{ij} X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    /// `c[i][j][k]` is the coefficient of `X_k` in `[X_i, X_j]`.
    c: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    /// Build from sparse triples `(i, j, k, c^k_{ij})`; entries for `j < i`
    /// may be omitted and are filled by antisymmetry. Rejects tables that are
    /// not antisymmetric.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        triples: &[(usize, usize, usize, Rat)],
    ) -> Result<LieAlgebra> {
        let n = basis.len();
        let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
        for (i, j, k, v) in triples {
            c[*i][*j][*k] += v.clone();
        }
        // fill whichever half of each pair was left empty
        for i in 0..n {
            for j in 0..i {
                let lower_zero = c[i][j].iter().all(|v| v.is_zero());
                let upper_zero = c[j][i].iter().all(|v| v.is_zero());
                if lower_zero && !upper_zero {
                    for k in 0..n {
                        c[i][j][k] = -c[j][i][k].clone();
                    }
                } else if upper_zero && !lower_zero {
                    for k in 0..n {
                        c[j][i][k] = -c[i][j][k].clone();
                    }
                }
            }
        }
        for i in 0..n {
            if c[i][i].iter().any(|v| !v.is_zero()) {
                return Err(Error::NotAntisymmetric { i, j: i });
            }
            for j in 0..i {
                for k in 0..n {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        Ok(LieAlgebra {
            name: name.into(),
            basis,
            c,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[i][j][k]
    }

    /// `[X_i, X_j]` as a degree-1 tensor.
    pub fn bracket_basis(&self, i: usize, j: usize) -> TensorElt {
        let mut t = TensorElt::zero(self.dim(), 1);
        for k in 0..self.dim() {
            t.add_term(vec![k], self.c[i][j][k].clone());
        }
        t
    }

    /// Bilinear bracket of degree-1 tensors.
    pub fn bracket(&self, x: &TensorElt, y: &TensorElt) -> Result<TensorElt> {
        if x.dim != self.dim() || y.dim != self.dim() || x.degree != 1 || y.degree != 1 {
            return Err(Error::BasisMismatch);
        }
        let mut out = TensorElt::zero(self.dim(), 1);
        for (mi, ci) in &x.terms {
            for (mj, cj) in &y.terms {
                let (i, j) = (mi[0], mj[0]);
                for k in 0..self.dim() {
                    let v = &self.c[i][j][k];
                    if !v.is_zero() {
                        out.add_term(vec![k], ci.clone() * cj.clone() * v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Jacobiator over every basis triple; an empty failure list means pass.
    pub fn jacobi_check(&self) -> VerificationReport {
        let n = self.dim();
        let mut report = VerificationReport::new(format!("jacobi[{}]", self.name));
        let mut failures = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in 0..n {
                        let mut s = Rat::zero();
                        for m in 0..n {
                            s += self.c[j][k][m].clone() * self.c[i][m][l].clone();
                            s += self.c[k][i][m].clone() * self.c[j][m][l].clone();
                            s += self.c[i][j][m].clone() * self.c[k][m][l].clone();
                        }
                        if !s.is_zero() {
                            failures.push(format!(
                                "({},{},{}) -> {} coefficient {}",
                                self.basis[i], self.basis[j], self.basis[k], self.basis[l], s
                            ));
                        }
                    }
                }
            }
        }
        if failures.is_empty() {
            report.check("jacobi identity on all basis triples", true, "");
        } else {
            report.check(
                "jacobi identity on all basis triples",
                false,
                failures.join("; "),
            );
        }
        report
    }

    /// Adjoint action of `X_i` on a tensor, leg by leg.
    pub fn adjoint_on_tensor(&self, i: usize, t: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero(t.dim, t.degree);
        for (idx, coeff) in &t.terms {
            for (leg, &b) in idx.iter().enumerate() {
                for k in 0..self.dim() {
                    let v = &self.c[i][b][k];
                    if !v.is_zero() {
                        let mut idx2 = idx.clone();
                        idx2[leg] = k;
                        out.add_term(idx2, coeff.clone() * v.clone());
                    }
                }
            }
        }
        out
    }
}

/// Exact-rational tensor over k-fold basis products, with a flag recording
/// that the element is a fully antisymmetrized (wedge) normal form.
/// Wedge convention: `X ^ Y := X (x) Y - Y (x) X`, no 1/2 factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElt {
    pub dim: usize,
    pub degree: usize,
    pub terms: BTreeMap<Vec<usize>, Rat>,
    pub alternating: bool,
}

impl TensorElt {
    pub fn zero(dim: usize, degree: usize) -> Self {
        TensorElt {
            dim,
            degree,
            terms: BTreeMap::new(),
            alternating: false,
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut t = TensorElt::zero(dim, 1);
        t.add_term(vec![i], Rat::from_integer(1.into()));
        t
    }

    /// `X_i ^ X_j = X_i (x) X_j - X_j (x) X_i`.
    pub fn wedge2(dim: usize, i: usize, j: usize, coeff: Rat) -> Self {
        let mut t = TensorElt::zero(dim, 2);
        t.add_term(vec![i, j], coeff.clone());
        t.add_term(vec![j, i], -coeff);
        t.alternating = true;
        t
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Rat) {
        debug_assert_eq!(idx.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(idx.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, other: &TensorElt) -> TensorElt {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        out.alternating = false;
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rat) -> TensorElt {
        let mut out = TensorElt::zero(self.dim, self.degree);
        out.alternating = self.alternating;
        for (i, c) in &self.terms {
            out.add_term(i.clone(), c.clone() * q.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component(&self, idx: &[usize]) -> Rat {
        self.terms.get(idx).cloned().unwrap_or_else(Rat::zero)
    }

    /// Signed average over permutations (the antisymmetric projector).
    pub fn antisymmetrized(&self) -> TensorElt {
        let mut out = TensorElt::zero(self.dim, self.degree);
        for (idx, c) in &self.terms {
            for (perm, sign) in permutations_signed(self.degree) {
                let pidx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                out.add_term(pidx, c.clone() * Rat::from_integer(sign.into()));
            }
        }
        let fact: i64 = (1..=self.degree as i64).product();
        let mut out = out.scale(&Rat::new(1.into(), fact.into()));
        out.alternating = true;
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetrized().terms == self.terms
    }

    pub fn display_with(&self, basis: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.terms {
            let names: Vec<&str> = idx.iter().map(|&i| basis[i].as_str()).collect();
            parts.push(format!("{}*{}", c, names.join("(x)")));
        }
        parts.join(" + ")
    }
}

fn permutations_signed(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>, sign: i64) {
        if k + 1 >= items.len() {
            out.push((items.clone(), sign));
            return;
        }
        for i in k..items.len() {
            let s = if i == k { sign } else { -sign };
            items.swap(k, i);
            go(items, k + 1, out, s);
            items.swap(k, i);
        }
    }
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut items, 0, &mut out, 1);
    out
}

/// Alternating degree-2 element with its component matrix `r^{ij}`
/// (`r = sum_{i<j} r^{ij} X_i ^ X_j`, full matrix antisymmetric).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub dim: usize,
    rho: BTreeMap<(usize, usize), Rat>,
}

impl RMatrix {
    pub fn zero(dim: usize) -> Self {
        RMatrix {
            dim,
            rho: BTreeMap::new(),
        }
    }

    /// From wedge-basis components `(i, j, coeff)` with `i < j`.
    pub fn from_wedge(dim: usize, comps: &[(usize, usize, Rat)]) -> Self {
        let mut rho = BTreeMap::new();
        for (i, j, c) in comps {
            assert!(i < j);
            if !c.is_zero() {
                rho.insert((*i, *j), c.clone());
                rho.insert((*j, *i), -c.clone());
            }
        }
        RMatrix { dim, rho }
    }

    /// Extract from an alternating degree-2 tensor.
    pub fn from_tensor(t: &TensorElt) -> Result<RMatrix> {
        if t.degree != 2 || !t.is_antisymmetric() {
            return Err(Error::BasisMismatch);
        }
        let mut rho = BTreeMap::new();
        for (idx, c) in &t.terms {
            rho.insert((idx[0], idx[1]), c.clone());
        }
        Ok(RMatrix { dim: t.dim, rho })
    }

    pub fn component(&self, i: usize, j: usize) -> Rat {
        self.rho.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn to_tensor(&self) -> TensorElt {
        let mut t = TensorElt::zero(self.dim, 2);
        for ((i, j), c) in &self.rho {
            t.add_term(vec![*i, *j], c.clone());
        }
        t.alternating = true;
        t
    }

    /// Wedge-basis components `(i, j, r^{ij})` with `i < j`.
    pub fn wedge_components(&self) -> Vec<(usize, usize, Rat)> {
        self.rho
            .iter()
            .filter(|((i, j), _)| i < j)
            .map(|((i, j), c)| (*i, *j, c.clone()))
            .collect()
    }

    /// Second-slot contraction `r#(xi) = sum r^{ij} X_i <xi, X_j>` for a
    /// covector given by components in the dual basis.
    pub fn sharp(&self, xi: &[Rat]) -> TensorElt {
        let mut out = TensorElt::zero(self.dim, 1);
        for ((i, j), c) in &self.rho {
            out.add_term(vec![*i], c.clone() * xi[*j].clone());
        }
        out
    }
}

/// Algebraic Schouten bracket `[r, r]` expanded via structure constants:
/// `[r12, r13] + [r12, r23] + [r13, r23]` as a degree-3 tensor. Zero iff `r`
/// is triangular.
pub fn schouten_cybe(g: &LieAlgebra, r: &RMatrix) -> TensorElt {
    let n = g.dim();
    let mut out = TensorElt::zero(n, 3);
    for ((i, j), cij) in &r.rho {
        for ((k, l), ckl) in &r.rho {
            let coeff = cij.clone() * ckl.clone();
            // [r12, r13]: [X_i, X_k] (x) X_j (x) X_l
            for m in 0..n {
                let v = g.structure_constant(*i, *k, m);
                if !v.is_zero() {
                    out.add_term(vec![m, *j, *l], coeff.clone() * v.clone());
                }
            }
            // [r12, r23]: X_i (x) [X_j, X_k] (x) X_l
            for m in 0..n {
                let v = g.structure_constant(*j, *k, m);
                if !v.is_zero() {
                    out.add_term(vec![*i, m, *l], coeff.clone() * v.clone());
                }
            }
            // [r13, r23]: X_i (x) X_k (x) [X_j, X_l]
            for m in 0..n {
                let v = g.structure_constant(*j, *l, m);
                if !v.is_zero() {
                    out.add_term(vec![*i, *k, m], coeff.clone() * v.clone());
                }
            }
        }
    }
    out
}

/// Cobracket induced by an r-matrix: `delta(X) = [r, X (x) 1 + 1 (x) X]`.
pub fn cobracket(g: &LieAlgebra, r: &RMatrix, x: &TensorElt) -> Result<TensorElt> {
    if x.degree != 1 || x.dim != g.dim() {
        return Err(Error::BasisMismatch);
    }
    let n = g.dim();
    let mut out = TensorElt::zero(n, 2);
    for (xm, xc) in &x.terms {
        let xi = xm[0];
        for ((i, j), c) in &r.rho {
            let coeff = c.clone() * xc.clone();
            // [X_i, X] (x) X_j + X_i (x) [X_j, X]
            for m in 0..n {
                let v = g.structure_constant(*i, xi, m);
                if !v.is_zero() {
                    out.add_term(vec![m, *j], coeff.clone() * v.clone());
                }
                let w = g.structure_constant(*j, xi, m);
                if !w.is_zero() {
                    out.add_term(vec![*i, m], coeff.clone() * w.clone());
                }
            }
        }
    }
    out.alternating = out.is_antisymmetric();
    Ok(out)
}

/// Structure constants of the dual algebra read off a cobracket table
/// (`delta[k]` = cobracket of the k-th basis vector). Verifies co-Jacobi.
pub fn dual_algebra(
    g: &LieAlgebra,
    delta: &[TensorElt],
    dual_name: &str,
    dual_basis: Vec<String>,
) -> Result<LieAlgebra> {
    let n = g.dim();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for (k, d) in delta.iter().enumerate() {
                if !d.is_antisymmetric() {
                    return Err(Error::BasisMismatch);
                }
                let v = d.component(&[i, j]);
                if !v.is_zero() {
                    triples.push((i, j, k, v));
                }
            }
        }
    }
    let dual = LieAlgebra::new(dual_name, dual_basis, &triples)?;
    let jac = dual.jacobi_check();
    if !jac.all_passed() {
        return Err(Error::Parse(format!(
            "co-Jacobi failure in dual of {}: {:?}",
            g.name,
            jac.failures()
                .iter()
                .map(|c| c.details.clone().unwrap_or_default())
                .collect::<Vec<_>>()
        )));
    }
    Ok(dual)
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// The `ax+b` Lie algebra: basis `H, E` with `[H, E] = 2E`.
pub fn axb() -> LieAlgebra {
    parse_fixture(AXB_FIXTURE).expect("builtin fixture parses")
}

/// Its dual: `[H*, E*] = -2 H*`.
pub fn axb_dual() -> LieAlgebra {
    parse_fixture(AXB_DUAL_FIXTURE).expect("builtin fixture parses")
}

/// The double of `ax+b` on basis `H, E, bH, bE` (musical notation `bX` for
/// the flat of `X`), with the six explicit bracket relations.
pub fn axb_double() -> LieAlgebra {
    parse_fixture(AXB_DOUBLE_FIXTURE).expect("builtin fixture parses")
}

pub const AXB_FIXTURE: &str = include_str!("../fixtures/axb.alg");
pub const AXB_DUAL_FIXTURE: &str = include_str!("../fixtures/axb_dual.alg");
pub const AXB_DOUBLE_FIXTURE: &str = include_str!("../fixtures/axb_double.alg");

/// Parse the structure-constant fixture format: `name <id>`, `basis <ids>`,
/// `c <i> <j> <k> <p[/q]>` lines, `#` comments.
pub fn parse_fixture(src: &str) -> Result<LieAlgebra> {
    let mut name = String::new();
    let mut basis: Vec<String> = Vec::new();
    let mut triples: Vec<(usize, usize, usize, Rat)> = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("name") => {
                name = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing name", lineno + 1)))?
                    .to_string();
            }
            Some("basis") => {
                basis = parts.map(|s| s.to_string()).collect();
            }
            Some("c") => {
                let idx = |s: Option<&str>| -> Result<usize> {
                    let label = s.ok_or_else(|| {
                        Error::Parse(format!("line {}: missing label", lineno + 1))
                    })?;
                    basis
                        .iter()
                        .position(|b| b == label)
                        .ok_or_else(|| Error::Parse(format!("unknown basis label `{label}`")))
                };
                let i = idx(Some(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing i".into()))?,
                ))?;
                let j = idx(Some(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing j".into()))?,
                ))?;
                let k = idx(Some(
                    parts
                        .next()
                        .ok_or_else(|| Error::Parse("missing k".into()))?,
                ))?;
                let v = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing value", lineno + 1)))?;
                triples.push((i, j, k, parse_rat(v)?));
            }
            Some(other) => {
                return Err(Error::Parse(format!(
                    "line {}: unknown directive `{other}`",
                    lineno + 1
                )))
            }
            None => {}
        }
    }
    LieAlgebra::new(name, basis, &triples)
}

/// Serialize back to the fixture format (upper-triangle triples only).
pub fn serialize_fixture(g: &LieAlgebra) -> String {
    let mut out = format!("name {}\nbasis {}\n", g.name, g.basis.join(" "));
    for i in 0..g.dim() {
        for j in (i + 1)..g.dim() {
            for k in 0..g.dim() {
                let v = g.structure_constant(i, j, k);
                if !v.is_zero() {
                    out.push_str(&format!(
                        "c {} {} {} {}\n",
                        g.basis[i],
                        g.basis[j],
                        g.basis[k],
                        fmt_rat(v)
                    ));
                }
            }
        }
    }
    out
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |x: &str| -> Result<num_bigint::BigInt> {
        x.parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => Ok(Rat::new(parse_int(n)?, parse_int(d)?)),
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

pub(crate) fn fmt_rat(q: &Rat) -> String {
    use num_traits::One;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_fixture(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    #[test]
    fn bracket_examples() {
        let s = axb();
        let h = TensorElt::basis(2, 0);
        let e = TensorElt::basis(2, 1);
        // [H, E] = 2E
        assert_eq!(s.bracket(&h, &e).unwrap(), e.scale(&int(2)));
        // [H, H] = 0
        assert!(s.bracket(&h, &h).unwrap().is_zero());
        // [H*, E*] = -2 H* on the dual
        let sd = axb_dual();
        let hs = TensorElt::basis(2, 0);
        let es = TensorElt::basis(2, 1);
        assert_eq!(sd.bracket(&hs, &es).unwrap(), hs.scale(&int(-2)));
    }

    #[test]
    fn jacobi_fixtures_pass() {
        assert!(axb().jacobi_check().all_passed());
        assert!(axb_dual().jacobi_check().all_passed());
        assert!(axb_double().jacobi_check().all_passed());
    }

    #[test]
    fn jacobi_tampered_double_fails_with_listed_triples() {
        // c^E_{HE} tampered to 3 while keeping the mixed brackets of the double
        let src = AXB_DOUBLE_FIXTURE.replace("c H E E 2", "c H E E 3");
        let g = parse_fixture(&src).unwrap();
        let rep = g.jacobi_check();
        assert!(!rep.all_passed());
        let details = rep.failures()[0].details.clone().unwrap();
        assert!(
            details.contains("(H,E,"),
            "failing triples listed: {details}"
        );
    }

    #[test]
    fn cobracket_examples() {
        let s = axb();
        let r = RMatrix::from_wedge(2, &[(0, 1, int(1))]); // H ^ E
        let h = TensorElt::basis(2, 0);
        let e = TensorElt::basis(2, 1);
        // delta(H) = -2 H^E
        let dh = cobracket(&s, &r, &h).unwrap();
        assert_eq!(dh.terms, TensorElt::wedge2(2, 0, 1, int(-2)).terms);
        // delta(E) = 0
        assert!(cobracket(&s, &r, &e).unwrap().is_zero());
        // linearity: delta(H + E) = -2 H^E
        assert_eq!(cobracket(&s, &r, &h.add(&e)).unwrap().terms, dh.terms);
    }

    #[test]
    fn cobracket_cocycle_property() {
        // delta([X,Y]) = X.delta(Y) - Y.delta(X) on all basis pairs of axb
        let s = axb();
        let r = RMatrix::from_wedge(2, &[(0, 1, int(1))]);
        for i in 0..2 {
            for j in 0..2 {
                let xi = TensorElt::basis(2, i);
                let xj = TensorElt::basis(2, j);
                let lhs = cobracket(&s, &r, &s.bracket(&xi, &xj).unwrap()).unwrap();
                let rhs = s
                    .adjoint_on_tensor(i, &cobracket(&s, &r, &xj).unwrap())
                    .add(
                        &s.adjoint_on_tensor(j, &cobracket(&s, &r, &xi).unwrap())
                            .scale(&int(-1)),
                    );
                assert_eq!(lhs.terms, rhs.terms, "cocycle fails at ({i},{j})");
            }
        }
    }

    #[test]
    fn dual_algebra_examples() {
        let s = axb();
        let r = RMatrix::from_wedge(2, &[(0, 1, int(1))]);
        let dh = cobracket(&s, &r, &TensorElt::basis(2, 0)).unwrap();
        let de = cobracket(&s, &r, &TensorElt::basis(2, 1)).unwrap();
        let dual = dual_algebra(
            &s,
            &[dh.clone(), de.clone()],
            "axb_dual",
            vec!["Hs".into(), "Es".into()],
        )
        .unwrap();
        assert_eq!(dual, axb_dual());

        // zero cobracket -> abelian dual
        let z = TensorElt {
            alternating: true,
            ..TensorElt::zero(2, 2)
        };
        let ab = dual_algebra(&s, &[z.clone(), z], "ab", vec!["u".into(), "v".into()]).unwrap();
        assert!(ab
            .bracket(&TensorElt::basis(2, 0), &TensorElt::basis(2, 1))
            .unwrap()
            .is_zero());

        // scaling delta by 3 scales the constants by 3
        let scaled = dual_algebra(
            &s,
            &[dh.scale(&int(3)), de.scale(&int(3))],
            "scaled",
            vec!["Hs".into(), "Es".into()],
        )
        .unwrap();
        assert_eq!(*scaled.structure_constant(0, 1, 0), int(-6));
    }

    #[test]
    fn redualization_returns_original() {
        // dualize axb_dual via the cobracket dual to the axb bracket
        let s = axb();
        let sd = axb_dual();
        // delta'(X*_k)^{ij} = c^k_{ij} of axb
        let mut deltas = Vec::new();
        for k in 0..2 {
            let mut d = TensorElt::zero(2, 2);
            for i in 0..2 {
                for j in 0..2 {
                    d.add_term(vec![i, j], s.structure_constant(i, j, k).clone());
                }
            }
            d.alternating = d.is_antisymmetric();
            deltas.push(d);
        }
        let back = dual_algebra(&sd, &deltas, "axb", vec!["H".into(), "E".into()]).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn schouten_cybe_examples() {
        let s = axb();
        let r = RMatrix::from_wedge(2, &[(0, 1, int(1))]);
        assert!(schouten_cybe(&s, &r).is_zero());

        let d = axb_double();
        let r4 = RMatrix::from_wedge(4, &[(0, 1, int(1))]);
        let cyb = schouten_cybe(&d, &r4);
        // brute-force component oracle
        let n = 4;
        let rho = |i: usize, j: usize| r4.component(i, j);
        let mut oracle = TensorElt::zero(n, 3);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut v = Rat::zero();
                    for i in 0..n {
                        for k in 0..n {
                            v += rho(i, b) * rho(k, c) * d.structure_constant(i, k, a).clone();
                            v += rho(a, i) * rho(k, c) * d.structure_constant(i, k, b).clone();
                            v += rho(a, i) * rho(b, k) * d.structure_constant(i, k, c).clone();
                        }
                    }
                    oracle.add_term(vec![a, b, c], v);
                }
            }
        }
        assert_eq!(cyb.terms, oracle.terms);
        // H ^ E stays triangular inside the double
        assert!(cyb.is_zero());

        assert!(schouten_cybe(&s, &RMatrix::zero(2)).is_zero());
    }

    #[test]
    fn double_table_and_heisenberg() {
        let d = axb_double();
        let (h, e, bh, be) = (0usize, 1usize, 2usize, 3usize);
        let basis = |i| TensorElt::basis(4, i);
        // [bH, H] = 2(bH - H)
        let v = d.bracket(&basis(bh), &basis(h)).unwrap();
        assert_eq!(v.component(&[bh]), int(2));
        assert_eq!(v.component(&[h]), int(-2));
        // [E, bE] = 0
        assert!(d.bracket(&basis(e), &basis(be)).unwrap().is_zero());
        // F := bH - H, Z := 2E - 2bE, [E, F] = Z, [F, Z] = [E, Z] = 0
        let f = basis(bh).add(&basis(h).scale(&int(-1)));
        let z = basis(e).scale(&int(2)).add(&basis(be).scale(&int(-2)));
        assert_eq!(d.bracket(&basis(e), &f).unwrap().terms, z.terms);
        assert!(d.bracket(&f, &z).unwrap().is_zero());
        assert!(d.bracket(&basis(e), &z).unwrap().is_zero());
        // scaling of Z consistent with Omega(E,F) = 1: [E,F] = 1*Z exactly
        let ratio = d.bracket(&basis(e), &f).unwrap().component(&[e]) / z.component(&[e]);
        assert_eq!(ratio, int(1));
    }

    #[test]
    fn flat_map_intertwines_brackets() {
        // bH = E*, bE = -H*: b[X,Y] = [bX, bY]_dual on the basis
        let s = axb();
        let sd = axb_dual();
        let flat = |t: &TensorElt| -> TensorElt {
            let mut out = TensorElt::zero(2, 1);
            for (idx, c) in &t.terms {
                match idx[0] {
                    0 => out.add_term(vec![1], c.clone()),
                    1 => out.add_term(vec![0], -c.clone()),
                    _ => unreachable!(),
                }
            }
            out
        };
        for i in 0..2 {
            for j in 0..2 {
                let xi = TensorElt::basis(2, i);
                let xj = TensorElt::basis(2, j);
                let lhs = flat(&s.bracket(&xi, &xj).unwrap());
                let rhs = sd.bracket(&flat(&xi), &flat(&xj)).unwrap();
                assert_eq!(lhs.terms, rhs.terms);
            }
        }
    }

    #[test]
    fn fixture_round_trip() {
        for src in [AXB_FIXTURE, AXB_DUAL_FIXTURE, AXB_DOUBLE_FIXTURE] {
            let g = parse_fixture(src).unwrap();
            let there_and_back = parse_fixture(&serialize_fixture(&g)).unwrap();
            assert_eq!(g, there_and_back);
        }
    }

    #[test]
    fn antisymmetry_enforced() {
        let bad = LieAlgebra::new(
            "bad",
            vec!["X".into(), "Y".into()],
            &[(0, 1, 0, int(1)), (1, 0, 0, int(1))],
        );
        assert!(matches!(bad, Err(Error::NotAntisymmetric { .. })));
        let diag = LieAlgebra::new("bad2", vec!["X".into()], &[(0, 0, 0, rat(1, 2))]);
        assert!(matches!(diag, Err(Error::NotAntisymmetric { .. })));
    }
}
