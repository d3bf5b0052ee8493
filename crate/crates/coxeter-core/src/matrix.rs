//! Coxeter matrices and their graphs.
//!
//! A Coxeter matrix on `I = {1,…,n}` is symmetric with `m_ii = 1` and
//! `m_ij ∈ {2,3,…} ∪ {∞}` off the diagonal. The graph `Γ(M)` has an edge
//! `i — j` exactly when `m_ij > 2`.

use crate::subset::{self, Subset};
use crate::{Error, Result};

/// Sentinel for `m_ij = ∞`. Encoded as `0` at the JSON boundary.
pub const INF: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: u8,
    m: Vec<u32>, // row-major n×n, INF for ∞
}

impl CoxeterMatrix {
    /// Builds a matrix from explicit rows, validating the defining axioms.
    /// `0` entries are accepted as ∞ (the JSON encoding).
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n > 31 {
            return Err(Error::Invalid(format!("rank {n} exceeds the hard limit 31")));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        let norm = |x: u32| if x == 0 { INF } else { x };
        let mut m = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let e = norm(rows[i][j]);
                if i == j && e != 1 {
                    return Err(Error::Invalid(format!("diagonal entry m_{{{0},{0}}} must be 1", i + 1)));
                }
                if i != j && e < 2 {
                    return Err(Error::Invalid(format!(
                        "off-diagonal entry m_{{{},{}}} must be ≥ 2 or ∞",
                        i + 1,
                        j + 1
                    )));
                }
                if e != norm(rows[j][i]) {
                    return Err(Error::Invalid(format!("matrix not symmetric at ({},{})", i + 1, j + 1)));
                }
                m[i * n + j] = e;
            }
        }
        Ok(CoxeterMatrix { n: n as u8, m })
    }

    fn from_bonds(n: u8, bonds: &[(u8, u8, u32)]) -> Self {
        let nn = n as usize;
        let mut m = vec![2u32; nn * nn];
        for i in 0..nn {
            m[i * nn + i] = 1;
        }
        let mut out = CoxeterMatrix { n, m };
        for &(i, j, b) in bonds {
            out.set(i, j, b);
        }
        out
    }

    fn set(&mut self, i: u8, j: u8, bond: u32) {
        let n = self.n as usize;
        self.m[(i as usize - 1) * n + (j as usize - 1)] = bond;
        self.m[(j as usize - 1) * n + (i as usize - 1)] = bond;
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    /// Bond `m_ij` (1-based labels).
    pub fn m(&self, i: u8, j: u8) -> u32 {
        debug_assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.m[(i as usize - 1) * self.n as usize + (j as usize - 1)]
    }

    pub fn full_set(&self) -> Subset {
        subset::full(self.n)
    }

    pub fn gens(&self) -> impl Iterator<Item = u8> {
        1..=self.n
    }

    /// Neighbors of `i` in `Γ(M)` (bonds > 2), restricted to `within`.
    pub fn neighbors(&self, i: u8, within: Subset) -> Subset {
        let mut out = subset::EMPTY;
        for j in subset::members(within) {
            if j != i && self.m(i, j) > 2 {
                out |= subset::singleton(j);
            }
        }
        out
    }

    /// Restriction `M_J`, relabeled to `1..|J|` in ascending label order.
    /// Returns the submatrix together with `labels`, where `labels[k-1]` is
    /// the original label of new vertex `k`.
    pub fn submatrix(&self, j: Subset) -> Result<(CoxeterMatrix, Vec<u8>)> {
        if !subset::is_subset(j, self.full_set()) {
            return Err(Error::Invalid(format!(
                "{} is not a subset of the index set",
                subset::display(j)
            )));
        }
        let labels: Vec<u8> = subset::members(j).collect();
        let k = labels.len();
        let mut m = vec![1u32; k * k];
        for a in 0..k {
            for b in 0..k {
                m[a * k + b] = self.m(labels[a], labels[b]);
            }
        }
        Ok((CoxeterMatrix { n: k as u8, m }, labels))
    }

    /// `M × M'`: disjoint union with all cross bonds 2. The second factor is
    /// relabeled to start at `rank(M)+1`.
    pub fn product(&self, other: &CoxeterMatrix) -> CoxeterMatrix {
        self.join(other, 2)
    }

    /// `M ∐ M'`: disjoint union with all cross bonds ∞.
    pub fn coproduct(&self, other: &CoxeterMatrix) -> CoxeterMatrix {
        self.join(other, INF)
    }

    fn join(&self, other: &CoxeterMatrix, cross: u32) -> CoxeterMatrix {
        let (a, b) = (self.n as usize, other.n as usize);
        let n = a + b;
        let mut m = vec![cross; n * n];
        for i in 0..a {
            for j in 0..a {
                m[i * n + j] = self.m[i * a + j];
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i) * n + (a + j)] = other.m[i * b + j];
            }
        }
        CoxeterMatrix { n: n as u8, m }
    }

    /// Maximal connected subsets of `J` in `Γ(M)`, sorted by least member.
    pub fn connected_components(&self, j: Subset) -> Vec<Subset> {
        let mut rest = j & self.full_set();
        let mut out = Vec::new();
        while let Some(seed) = subset::min_member(rest) {
            let mut comp = subset::singleton(seed);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = subset::EMPTY;
                for i in subset::members(frontier) {
                    next |= self.neighbors(i, rest) & !comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self, j: Subset) -> bool {
        j == 0 || self.connected_components(j).len() == 1
    }

    // ---- standard matrices (the numbering of the classification figure) ----

    /// Chain `1 — 2 — … — n`, all bonds 3.
    pub fn type_a(n: u8) -> Result<Self> {
        if n < 1 {
            return Err(Error::Invalid("A_n needs n ≥ 1".into()));
        }
        let bonds: Vec<_> = (1..n).map(|i| (i, i + 1, 3)).collect();
        Ok(Self::from_bonds(n, &bonds))
    }

    /// Chain with `m_{n-1,n} = 4`.
    pub fn type_b(n: u8) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("B_n needs n ≥ 2".into()));
        }
        let mut bonds: Vec<_> = (1..n).map(|i| (i, i + 1, 3)).collect();
        bonds.last_mut().unwrap().2 = 4;
        Ok(Self::from_bonds(n, &bonds))
    }

    /// Chain `1 — … — (n-1)` plus vertex `n` attached to `n-2`.
    ///
    /// `n = 3` is accepted as the relabeled A₃ chain `2 — 1 — 3` (the "A₃ as
    /// D₃" convention); the classifier still reports it as type A₃.
    pub fn type_d(n: u8) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid("D_n needs n ≥ 3".into()));
        }
        let mut bonds: Vec<_> = (1..n - 1).map(|i| (i, i + 1, 3)).collect();
        bonds.push((n - 2, n, 3));
        Ok(Self::from_bonds(n, &bonds))
    }

    /// Chain `1 — … — (n-1)` plus vertex `n` attached to `3`.
    pub fn type_e(n: u8) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::Invalid("E_n needs n ∈ {6,7,8}".into()));
        }
        let mut bonds: Vec<_> = (1..n - 1).map(|i| (i, i + 1, 3)).collect();
        bonds.push((3, n, 3));
        Ok(Self::from_bonds(n, &bonds))
    }

    /// Chain `1 — 2 — 3 — 4` with `m_{23} = 4`.
    pub fn type_f4() -> Self {
        Self::from_bonds(4, &[(1, 2, 3), (2, 3, 4), (3, 4, 3)])
    }

    /// Chain with `m_{n-1,n} = 5`.
    pub fn type_h(n: u8) -> Result<Self> {
        if !(3..=4).contains(&n) {
            return Err(Error::Invalid("H_n needs n ∈ {3,4}".into()));
        }
        let mut bonds: Vec<_> = (1..n).map(|i| (i, i + 1, 3)).collect();
        bonds.last_mut().unwrap().2 = 5;
        Ok(Self::from_bonds(n, &bonds))
    }

    /// Two vertices with bond `m`.
    pub fn type_i2(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Invalid("I_2(m) needs m ≥ 2".into()));
        }
        Ok(Self::from_bonds(2, &[(1, 2, m)]))
    }

    // ---- parsing and serialization ----

    /// Parses a matrix spec: a type string (`"A4"`, `"B5"`, `"D6"`, `"E6"`,
    /// `"F4"`, `"H3"`, `"H4"`, `"I2:7"`), a product of such joined by `"x"`,
    /// or a JSON object `{"rank": n, "m": [[…]]}` with `0` encoding ∞.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return Self::parse_json(text);
        }
        let mut acc: Option<CoxeterMatrix> = None;
        for part in text.split('x') {
            let m = Self::parse_type(part.trim())?;
            acc = Some(match acc {
                None => m,
                Some(a) => a.product(&m),
            });
        }
        acc.ok_or_else(|| Error::Parse("empty matrix spec".into()))
    }

    fn parse_type(tok: &str) -> Result<Self> {
        let err = || Error::Parse(format!("unrecognized type string {tok:?}"));
        if let Some(rest) = tok.strip_prefix("I2:") {
            let m: u32 = rest.parse().map_err(|_| err())?;
            return Self::type_i2(m);
        }
        let (head, num) = tok.split_at(1);
        let n: u8 = num.parse().map_err(|_| err())?;
        match head {
            "A" => Self::type_a(n),
            "B" => Self::type_b(n),
            "D" => Self::type_d(n),
            "E" => Self::type_e(n),
            "F" if n == 4 => Ok(Self::type_f4()),
            "H" => Self::type_h(n),
            _ => Err(err()),
        }
    }

    fn parse_json(text: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
        let rank = v
            .get("rank")
            .and_then(|r| r.as_u64())
            .ok_or_else(|| Error::Parse("JSON matrix needs a \"rank\" field".into()))?;
        let rows_v = v
            .get("m")
            .and_then(|m| m.as_array())
            .ok_or_else(|| Error::Parse("JSON matrix needs an \"m\" array".into()))?;
        if rows_v.len() as u64 != rank {
            return Err(Error::Parse("JSON matrix: \"m\" does not match \"rank\"".into()));
        }
        let mut rows = Vec::new();
        for row in rows_v {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("JSON matrix rows must be arrays".into()))?;
            let mut out = Vec::new();
            for e in row {
                let e = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse("JSON matrix entries must be non-negative integers".into()))?;
                out.push(u32::try_from(e).map_err(|_| Error::Parse("matrix entry too large".into()))?);
            }
            rows.push(out);
        }
        Self::from_rows(&rows)
    }

    /// `{"rank": n, "m": [[…]]}` with `0` for ∞.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.n as usize;
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = self.m[i * n + j];
                        if e == INF {
                            0
                        } else {
                            e as u64
                        }
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "rank": self.n, "m": rows })
    }
}

impl std::fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoxeterMatrix(rank {}", self.n)?;
        for i in self.gens() {
            for j in self.gens() {
                if j > i && self.m(i, j) != 2 {
                    if self.m(i, j) == INF {
                        write!(f, ", m{}{}=inf", i, j)?;
                    } else {
                        write!(f, ", m{}{}={}", i, j, self.m(i, j))?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset;

    #[test]
    fn parse_named_types() {
        let a2 = CoxeterMatrix::parse("A2").unwrap();
        assert_eq!(a2.m(1, 2), 3);
        let i27 = CoxeterMatrix::parse("I2:7").unwrap();
        assert_eq!(i27.m(1, 2), 7);
        let prod = CoxeterMatrix::parse("A1xA1").unwrap();
        assert_eq!(prod.m(1, 2), 2);
        let b5 = CoxeterMatrix::parse("B5").unwrap();
        assert_eq!((b5.m(4, 5), b5.m(3, 4)), (4, 3));
        let d6 = CoxeterMatrix::parse("D6").unwrap();
        assert_eq!((d6.m(4, 6), d6.m(5, 6), d6.m(4, 5)), (3, 2, 3));
        let e7 = CoxeterMatrix::parse("E7").unwrap();
        assert_eq!((e7.m(3, 7), e7.m(6, 7)), (3, 2));
        assert!(CoxeterMatrix::parse("Z9").is_err());
        assert!(CoxeterMatrix::parse("E5").is_err());
    }

    #[test]
    fn parse_json_matrix() {
        let m = CoxeterMatrix::parse(r#"{"rank":2,"m":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(m.m(1, 2), INF);
        assert_eq!(m.to_json()["m"][0][1], 0);
        let round = CoxeterMatrix::parse(&CoxeterMatrix::parse("F4").unwrap().to_json().to_string()).unwrap();
        assert_eq!(round, CoxeterMatrix::type_f4());
        assert!(CoxeterMatrix::parse(r#"{"rank":2,"m":[[1,3],[4,1]]}"#).is_err());
        assert!(CoxeterMatrix::parse(r#"{"rank":2,"m":[[2,3],[3,1]]}"#).is_err());
    }

    #[test]
    fn components_and_products() {
        let a4 = CoxeterMatrix::parse("A4").unwrap();
        let comps = a4.connected_components(subset::parse("1,2,4").unwrap());
        assert_eq!(comps, vec![subset::parse("1,2").unwrap(), subset::parse("4").unwrap()]);
        assert_eq!(a4.connected_components(a4.full_set()), vec![a4.full_set()]);
        assert_eq!(a4.connected_components(0), Vec::<Subset>::new());

        let p = CoxeterMatrix::parse("A2").unwrap().product(&CoxeterMatrix::parse("B2").unwrap());
        assert_eq!(p.rank(), 4);
        assert_eq!((p.m(1, 2), p.m(3, 4), p.m(2, 3)), (3, 4, 2));
        let c = CoxeterMatrix::parse("A1").unwrap().coproduct(&CoxeterMatrix::parse("A1").unwrap());
        assert_eq!(c.m(1, 2), INF);
    }

    #[test]
    fn submatrix_relabels() {
        let b3 = CoxeterMatrix::parse("B3").unwrap();
        let (sub, labels) = b3.submatrix(subset::parse("2,3").unwrap()).unwrap();
        assert_eq!(labels, vec![2, 3]);
        assert_eq!(sub.m(1, 2), 4);
        let (empty, labels) = b3.submatrix(0).unwrap();
        assert_eq!(empty.rank(), 0);
        assert!(labels.is_empty());
        assert!(b3.submatrix(subset::parse("4").unwrap()).is_err());
    }

    #[test]
    fn d3_is_relabeled_a3() {
        let d3 = CoxeterMatrix::parse("D3").unwrap();
        assert_eq!((d3.m(1, 2), d3.m(1, 3), d3.m(2, 3)), (3, 3, 2));
    }
}
