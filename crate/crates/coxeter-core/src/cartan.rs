//! Generalized Cartan matrices and their interplay with Weyl-type Coxeter
//! matrices: the assignment A ↦ C(A), its one-sided inverse, and the
//! subordination calculus used by light homomorphisms.

use crate::matrix::{CoxeterMatrix, INF};
use crate::subset::{self, Subset};
use crate::{Error, Result};

/// A generalized Cartan matrix: `a_ii = 2`, off-diagonal entries ≤ 0, and
/// `a_ij = 0 ⟺ a_ji = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: u8,
    a: Vec<i64>,
}

impl CartanMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n > 31 {
            return Err(Error::Invalid(format!("rank {n} exceeds the supported 31")));
        }
        let mut a = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Invalid(format!("row {} has length {}, want {n}", i + 1, row.len())));
            }
            a.extend_from_slice(row);
        }
        for i in 0..n {
            if a[i * n + i] != 2 {
                return Err(Error::Invalid(format!("a_{{{0},{0}}} ≠ 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i * n + j] > 0 {
                    return Err(Error::Invalid(format!("a_{{{},{}}} > 0", i + 1, j + 1)));
                }
                if (a[i * n + j] == 0) != (a[j * n + i] == 0) {
                    return Err(Error::Invalid(format!(
                        "a_{{{0},{1}}} = 0 but a_{{{1},{0}}} ≠ 0",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanMatrix { n: n as u8, a })
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    /// Entry `a_ij`, labels 1-based.
    pub fn entry(&self, i: u8, j: u8) -> i64 {
        self.a[(i as usize - 1) * self.n as usize + (j as usize - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

impl std::fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CartanMatrix{:?}", self.rows())
    }
}

pub fn is_weyl_type(m: &CoxeterMatrix) -> bool {
    let gens: Vec<u8> = m.gens().collect();
    gens.iter().all(|&i| {
        gens.iter()
            .filter(|&&j| j > i)
            .all(|&j| matches!(m.m(i, j), 2 | 3 | 4 | 6 | INF))
    })
}

/// The Weyl-type Coxeter matrix C(A): products 0,1 ↦ bonds 2,3; products 2,3
/// ↦ bonds 4,6; larger products ↦ ∞.
pub fn cartan_to_coxeter(a: &CartanMatrix) -> CoxeterMatrix {
    let n = a.rank();
    let rows: Vec<Vec<u32>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == j {
                        return 1;
                    }
                    match a.entry(i, j) * a.entry(j, i) {
                        p @ (0 | 1) => 2 + p as u32,
                        p @ (2 | 3) => 2 * p as u32,
                        _ => INF,
                    }
                })
                .collect()
        })
        .collect();
    CoxeterMatrix::from_rows(&rows).expect("C(A) is a valid Coxeter matrix")
}

fn default_pair(bond: u32) -> (i64, i64) {
    // the (a_ij, a_ji) for i < j in the fixed total order
    match bond {
        2 => (0, 0),
        3 => (-1, -1),
        4 => (-1, -2),
        6 => (-1, -3),
        INF => (-1, -4),
        _ => unreachable!("non-Weyl bond {bond}"),
    }
}

/// A Cartan matrix with C(A) = M, built with the label order as the total
/// order: for `i < j` with `m_ij > 2`, `a_ij = −1` and `a_ji = −⌊m_ij/2⌋`
/// (or −4 at ∞).
pub fn coxeter_to_cartan(m: &CoxeterMatrix) -> Result<CartanMatrix> {
    if !is_weyl_type(m) {
        return Err(Error::Invalid(format!("{m:?} is not of Weyl type")));
    }
    let n = m.rank() as usize;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = 2;
        for j in i + 1..n {
            let (aij, aji) = default_pair(m.m(i as u8 + 1, j as u8 + 1));
            rows[i][j] = aij;
            rows[j][i] = aji;
        }
    }
    CartanMatrix::from_rows(&rows)
}

/// `A'` is `f`-subordinate to `A` when `a'_{i'j'} ≤ a_{ij}` whenever
/// `f(i') = {i}` and `f(j') = {j}` are nonempty and `i' ≠ j'`. `f[i'−1]`
/// holds the image of label `i'` as a subset of size ≤ 1.
pub fn is_f_subordinate(a_prime: &CartanMatrix, a: &CartanMatrix, f: &[Subset]) -> bool {
    let n = a_prime.rank() as usize;
    assert_eq!(f.len(), n, "one image per domain label");
    for ip in 1..=n as u8 {
        for jp in 1..=n as u8 {
            if ip == jp {
                continue;
            }
            let (fi, fj) = (f[ip as usize - 1], f[jp as usize - 1]);
            if fi == 0 || fj == 0 {
                continue;
            }
            let i = subset::min_member(fi).unwrap();
            let j = subset::min_member(fj).unwrap();
            if a_prime.entry(ip, jp) > a.entry(i, j) {
                return false;
            }
        }
    }
    true
}

/// Given Weyl-type `domain`/`codomain` matrices, a singleton-image map `f`
/// realizable by a light homomorphism (so `m'_{i'j'} ≥ m_{ij}` on nonempty
/// pairs), and `A` with C(A) = codomain, builds `A'` with C(A') = domain and
/// `A'` `f`-subordinate to `A`.
pub fn subordinate_cartan(
    domain: &CoxeterMatrix,
    codomain: &CoxeterMatrix,
    f: &[Subset],
    a: &CartanMatrix,
) -> Result<CartanMatrix> {
    if !is_weyl_type(domain) || !is_weyl_type(codomain) {
        return Err(Error::Invalid("both matrices must be of Weyl type".into()));
    }
    if cartan_to_coxeter(a) != *codomain {
        return Err(Error::Invalid("C(A) does not equal the codomain matrix".into()));
    }
    let n = domain.rank() as usize;
    if f.len() != n {
        return Err(Error::Invalid(format!("need {n} images, got {}", f.len())));
    }
    for &s in f {
        if subset::card(s) > 1 {
            return Err(Error::Invalid(format!("image {} is not a singleton", subset::display(s))));
        }
        if let Some(i) = subset::min_member(s) {
            if i > codomain.rank() {
                return Err(Error::Invalid(format!("image label {i} outside the codomain")));
            }
        }
    }

    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = 2;
    }
    for ip in 1..=n as u8 {
        for jp in ip + 1..=n as u8 {
            let mp = domain.m(ip, jp);
            let (fi, fj) = (f[ip as usize - 1], f[jp as usize - 1]);
            let pair = match (subset::min_member(fi), subset::min_member(fj)) {
                (Some(i), Some(j)) if i != j => {
                    let m = codomain.m(i, j);
                    if !(mp == INF || (m != INF && mp >= m)) {
                        return Err(Error::Invalid(format!(
                            "m'_{{{ip},{jp}}} < m_{{{i},{j}}}: not realizable by a homomorphism"
                        )));
                    }
                    if mp == m {
                        (a.entry(i, j), a.entry(j, i))
                    } else if m == 2 || m == 3 {
                        (
                            -1,
                            match mp {
                                3 => -1,
                                4 | 6 => -((mp / 2) as i64),
                                INF => -4,
                                _ => unreachable!("mp > m ≥ 2 is a Weyl bond"),
                            },
                        )
                    } else {
                        // m ∈ {4,6}: shrink each entry just enough to grow the product
                        let chi = |s: u8, t: u8| -> i64 {
                            if a.entry(s, t) == -1 {
                                0
                            } else if mp < INF {
                                1
                            } else {
                                2
                            }
                        };
                        (a.entry(i, j) - chi(i, j), a.entry(j, i) - chi(j, i))
                    }
                }
                _ => default_pair(mp), // empty or coinciding images: unconstrained
            };
            rows[ip as usize - 1][jp as usize - 1] = pair.0;
            rows[jp as usize - 1][ip as usize - 1] = pair.1;
        }
    }
    let a_prime = CartanMatrix::from_rows(&rows)?;
    debug_assert_eq!(cartan_to_coxeter(&a_prime), *domain);
    debug_assert!(is_f_subordinate(&a_prime, a, f));
    Ok(a_prime)
}
