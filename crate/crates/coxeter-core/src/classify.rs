//! Finite-type classification.
//!
//! A connected component is matched against the classification list
//! (A_n, B_n, D_n, E_6/7/8, F_4, H_3/H_4, I_2(m)) and, on success, a
//! relabeling onto the standard vertex numbering is produced:
//!
//! * A_n — chain `1 … n`;
//! * B_n — chain with `m_{n-1,n} = 4`;
//! * D_n — chain `1 … n-1` with vertex `n` attached to `n-2`;
//! * E_n — chain `1 … n-1` with vertex `n` attached to `3`;
//! * F_4 — chain with the 4-bond in the middle (`m_{23} = 4`);
//! * H_n — chain with `m_{n-1,n} = 5`;
//! * I_2(m) — one bond `m ≥ 5`.
//!
//! Rank-2 components with bond 3 or 4 are reported as A_2 resp. B_2.

use crate::matrix::{CoxeterMatrix, INF};
use crate::subset::{self, Subset};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    A(u8),
    B(u8),
    D(u8),
    E(u8),
    F4,
    H(u8),
    I2(u32),
}

impl TypeTag {
    pub fn rank(&self) -> u8 {
        match *self {
            TypeTag::A(n) | TypeTag::B(n) | TypeTag::D(n) | TypeTag::E(n) | TypeTag::H(n) => n,
            TypeTag::F4 => 4,
            TypeTag::I2(_) => 2,
        }
    }

    /// The matrix in the standard numbering above.
    pub fn standard_matrix(&self) -> CoxeterMatrix {
        match *self {
            TypeTag::A(n) => CoxeterMatrix::type_a(n),
            TypeTag::B(n) => CoxeterMatrix::type_b(n),
            TypeTag::D(n) => CoxeterMatrix::type_d(n),
            TypeTag::E(n) => CoxeterMatrix::type_e(n),
            TypeTag::F4 => Ok(CoxeterMatrix::type_f4()),
            TypeTag::H(n) => CoxeterMatrix::type_h(n),
            TypeTag::I2(m) => CoxeterMatrix::type_i2(m),
        }
        .expect("classification tags are always in range")
    }

    /// Coxeter number h: the order of any Coxeter element.
    pub fn coxeter_number(&self) -> u32 {
        match *self {
            TypeTag::A(n) => n as u32 + 1,
            TypeTag::B(n) => 2 * n as u32,
            TypeTag::D(n) => 2 * (n as u32 - 1),
            TypeTag::E(6) => 12,
            TypeTag::E(7) => 18,
            TypeTag::E(8) => 30,
            TypeTag::F4 => 12,
            TypeTag::H(3) => 10,
            TypeTag::H(4) => 30,
            TypeTag::I2(m) => m,
            _ => unreachable!(),
        }
    }

    /// |W|.
    pub fn group_order(&self) -> u128 {
        fn fact(n: u128) -> u128 {
            (1..=n).product()
        }
        match *self {
            TypeTag::A(n) => fact(n as u128 + 1),
            TypeTag::B(n) => (1u128 << n) * fact(n as u128),
            TypeTag::D(n) => (1u128 << (n - 1)) * fact(n as u128),
            TypeTag::E(6) => 51_840,
            TypeTag::E(7) => 2_903_040,
            TypeTag::E(8) => 696_729_600,
            TypeTag::F4 => 1_152,
            TypeTag::H(3) => 120,
            TypeTag::H(4) => 14_400,
            TypeTag::I2(m) => 2 * m as u128,
            _ => unreachable!(),
        }
    }

    /// Number of positive roots = ℓ(w∘).
    pub fn positive_roots(&self) -> u32 {
        match *self {
            TypeTag::A(n) => n as u32 * (n as u32 + 1) / 2,
            TypeTag::B(n) => (n as u32) * (n as u32),
            TypeTag::D(n) => n as u32 * (n as u32 - 1),
            TypeTag::E(6) => 36,
            TypeTag::E(7) => 63,
            TypeTag::E(8) => 120,
            TypeTag::F4 => 24,
            TypeTag::H(3) => 15,
            TypeTag::H(4) => 60,
            TypeTag::I2(m) => m,
            _ => unreachable!(),
        }
    }
}

impl std::fmt::Display for TypeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            TypeTag::A(n) => write!(f, "A{n}"),
            TypeTag::B(n) => write!(f, "B{n}"),
            TypeTag::D(n) => write!(f, "D{n}"),
            TypeTag::E(n) => write!(f, "E{n}"),
            TypeTag::F4 => write!(f, "F4"),
            TypeTag::H(n) => write!(f, "H{n}"),
            TypeTag::I2(m) => write!(f, "I2:{m}"),
        }
    }
}

/// One classified component: `labels[k-1]` is the vertex playing the role of
/// standard vertex `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentType {
    pub tag: TypeTag,
    pub labels: Vec<u8>,
}

impl ComponentType {
    pub fn member_set(&self) -> Subset {
        subset::from_members(self.labels.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTypeReport {
    /// Sorted by least vertex label.
    pub components: Vec<ComponentType>,
}

impl FiniteTypeReport {
    pub fn group_order(&self) -> u128 {
        self.components.iter().map(|c| c.tag.group_order()).product()
    }

    /// ℓ(w∘) of the whole (reducible) type.
    pub fn longest_length(&self) -> u32 {
        self.components.iter().map(|c| c.tag.positive_roots()).sum()
    }

    /// Human-readable type string, e.g. `"A4"`, `"B3xA1"`, `"empty"`.
    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "empty".into();
        }
        self.components
            .iter()
            .map(|c| c.tag.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Classifies `M_J`; `None` means infinite type. `J ∈ F(M)` iff `Some`.
pub fn classify_finite(m: &CoxeterMatrix, j: Subset) -> Option<FiniteTypeReport> {
    let mut components = Vec::new();
    for comp in m.connected_components(j) {
        components.push(classify_component(m, comp)?);
    }
    Some(FiniteTypeReport { components })
}

pub fn is_finite_type(m: &CoxeterMatrix, j: Subset) -> bool {
    classify_finite(m, j).is_some()
}

fn classify_component(m: &CoxeterMatrix, comp: Subset) -> Option<ComponentType> {
    let verts: Vec<u8> = subset::members(comp).collect();
    let n = verts.len();

    for (a, &i) in verts.iter().enumerate() {
        for &k in &verts[a + 1..] {
            if m.m(i, k) == INF {
                return None;
            }
        }
    }

    if n == 1 {
        return finish(m, TypeTag::A(1), verts);
    }
    if n == 2 {
        let b = m.m(verts[0], verts[1]);
        let tag = match b {
            3 => TypeTag::A(2),
            4 => TypeTag::B(2),
            _ => TypeTag::I2(b),
        };
        return finish(m, tag, verts);
    }

    // Rank ≥ 3: the graph must be a tree with max degree 3, at most one
    // branch vertex, at most one bond > 3, and branch/heavy-bond exclusion.
    let deg = |i: u8| subset::card(m.neighbors(i, comp));
    let edge_count: u32 = verts.iter().map(|&i| deg(i)).sum::<u32>() / 2;
    if edge_count != n as u32 - 1 {
        return None; // a cycle: affine or worse
    }
    let branch: Vec<u8> = verts.iter().copied().filter(|&i| deg(i) >= 3).collect();
    if branch.len() > 1 || branch.iter().any(|&i| deg(i) > 3) {
        return None;
    }
    let mut heavy: Option<(u8, u8, u32)> = None;
    for (a, &i) in verts.iter().enumerate() {
        for &k in &verts[a + 1..] {
            let b = m.m(i, k);
            if b > 3 {
                if heavy.is_some() {
                    return None;
                }
                heavy = Some((i, k, b));
            }
        }
    }

    if let Some(&b) = branch.first() {
        if heavy.is_some() {
            return None;
        }
        // Three simply laced arms; sort by (length desc, vertex list asc).
        let mut arms: Vec<Vec<u8>> = subset::members(m.neighbors(b, comp))
            .map(|nb| walk_arm(m, comp, b, nb))
            .collect();
        arms.sort_by(|x, y| y.len().cmp(&x.len()).then(x.cmp(y)));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match (lens[0], lens[1], lens[2]) {
            (_, 1, 1) => {
                // D_{p+3}: branch = n-2, long arm fills n-3 … 1, tips n-1 < n.
                let mut labels = vec![0u8; n];
                labels[n - 3] = b;
                for (t, &v) in arms[0].iter().enumerate() {
                    labels[n - 4 - t] = v;
                }
                let (t1, t2) = (arms[1][0].min(arms[2][0]), arms[1][0].max(arms[2][0]));
                labels[n - 2] = t1;
                labels[n - 1] = t2;
                finish(m, TypeTag::D(n as u8), labels)
            }
            (2, 2, 1) | (3, 2, 1) | (4, 2, 1) if n >= 6 => {
                // E_n: branch = 3, short-2 arm fills 2,1; long arm 4 … n-1;
                // the length-1 arm is vertex n.
                let tag = TypeTag::E(n as u8);
                let mut labels = vec![0u8; n];
                labels[2] = b;
                let (long, short2) = if lens[0] == 2 {
                    // E6: two length-2 arms; arms are sorted lexicographically,
                    // so arms[0] is the canonical "left" arm.
                    (&arms[1], &arms[0])
                } else {
                    (&arms[0], &arms[1])
                };
                labels[1] = short2[0];
                labels[0] = short2[1];
                for (t, &v) in long.iter().enumerate() {
                    labels[3 + t] = v;
                }
                labels[n - 1] = arms[2][0];
                finish(m, tag, labels)
            }
            _ => None,
        }
    } else {
        // A chain; orient from the smaller-labeled endpoint.
        let ends: Vec<u8> = verts.iter().copied().filter(|&i| deg(i) == 1).collect();
        let mut path = walk_arm(m, comp, ends[0], ends[0]);
        match heavy {
            None => finish(m, TypeTag::A(n as u8), path),
            Some((u, v, b)) => {
                let pos = path
                    .windows(2)
                    .position(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
                    .expect("heavy bond lies on the path");
                match b {
                    4 if pos == n - 2 => finish(m, TypeTag::B(n as u8), path),
                    4 if pos == 0 => {
                        path.reverse();
                        finish(m, TypeTag::B(n as u8), path)
                    }
                    4 if n == 4 && pos == 1 => finish(m, TypeTag::F4, path),
                    5 if (3..=4).contains(&n) && pos == n - 2 => finish(m, TypeTag::H(n as u8), path),
                    5 if (3..=4).contains(&n) && pos == 0 => {
                        path.reverse();
                        finish(m, TypeTag::H(n as u8), path)
                    }
                    _ => None,
                }
            }
        }
    }
}

/// Walks a degree-≤2 path away from `from`, starting at `start`
/// (`start == from` walks the whole chain from an endpoint).
fn walk_arm(m: &CoxeterMatrix, comp: Subset, from: u8, start: u8) -> Vec<u8> {
    let mut out = vec![start];
    let mut prev = from;
    let mut cur = start;
    loop {
        let next = subset::members(m.neighbors(cur, comp)).find(|&x| x != prev && x != cur);
        match next {
            Some(x) => {
                out.push(x);
                prev = cur;
                cur = x;
            }
            None => return out,
        }
    }
}

/// Verifies the relabeling against the standard matrix before returning it.
fn finish(m: &CoxeterMatrix, tag: TypeTag, labels: Vec<u8>) -> Option<ComponentType> {
    let std = tag.standard_matrix();
    for k in 1..=std.rank() {
        for l in 1..=std.rank() {
            if std.m(k, l) != m.m(labels[k as usize - 1], labels[l as usize - 1]) {
                debug_assert!(false, "relabeling mismatch for {tag}");
                return None;
            }
        }
    }
    Some(ComponentType { tag, labels })
}

/// Every `J ⊆ I` of finite type, ascending as masks; includes ∅.
pub fn finite_subsets(m: &CoxeterMatrix, rank_cap: usize) -> Result<Vec<Subset>> {
    if m.rank() as usize > rank_cap {
        return Err(Error::CapExceeded {
            what: format!("finite_subsets on rank {}", m.rank()),
            cap: rank_cap,
        });
    }
    Ok(subset::subsets_of(m.full_set())
        .into_iter()
        .filter(|&j| is_finite_type(m, j))
        .collect())
}

/// All matrix-preserving permutations, as vectors `perm[i-1] = σ(i)`,
/// lexicographically sorted (identity first).
pub fn diagram_automorphisms(m: &CoxeterMatrix, rank_cap: usize) -> Result<Vec<Vec<u8>>> {
    let n = m.rank() as usize;
    if n > rank_cap {
        return Err(Error::CapExceeded {
            what: format!("diagram_automorphisms on rank {}", m.rank()),
            cap: rank_cap,
        });
    }
    // Vertex invariant: sorted multiset of incident bonds.
    let profile: Vec<Vec<u32>> = (1..=n as u8)
        .map(|i| {
            let mut p: Vec<u32> = (1..=n as u8).filter(|&j| j != i).map(|j| m.m(i, j)).collect();
            p.sort_unstable();
            p
        })
        .collect();

    let mut out = Vec::new();
    let mut perm = vec![0u8; n];
    let mut used = vec![false; n];
    search_autos(m, &profile, &mut perm, &mut used, 0, &mut out);
    Ok(out)
}

fn search_autos(
    m: &CoxeterMatrix,
    profile: &[Vec<u32>],
    perm: &mut Vec<u8>,
    used: &mut Vec<bool>,
    pos: usize,
    out: &mut Vec<Vec<u8>>,
) {
    let n = perm.len();
    if pos == n {
        out.push(perm.clone());
        return;
    }
    for img in 1..=n as u8 {
        if used[img as usize - 1] || profile[pos] != profile[img as usize - 1] {
            continue;
        }
        if (0..pos).any(|t| m.m(t as u8 + 1, pos as u8 + 1) != m.m(perm[t], img)) {
            continue;
        }
        perm[pos] = img;
        used[img as usize - 1] = true;
        search_autos(m, profile, perm, used, pos + 1, out);
        used[img as usize - 1] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag_of(spec: &str) -> String {
        let m = CoxeterMatrix::parse(spec).unwrap();
        classify_finite(&m, m.full_set()).unwrap().type_string()
    }

    #[test]
    fn recognizes_standard_types() {
        for spec in [
            "A1", "A2", "A5", "A10", "B2", "B3", "B7", "D4", "D5", "D10", "E6", "E7", "E8", "F4",
            "H3", "H4", "I2:5", "I2:6", "I2:7", "I2:30",
        ] {
            assert_eq!(tag_of(spec), spec, "classify({spec})");
        }
        assert_eq!(tag_of("A2xB3"), "A2xB3");
        assert_eq!(tag_of("D3"), "A3"); // relabeled chain 2—1—3
    }

    #[test]
    fn relabeling_maps_standard_to_actual() {
        // Scramble D5 through a permutation and check the recovered labels.
        let d5 = CoxeterMatrix::parse("D5").unwrap();
        let perm: Vec<u8> = vec![3, 5, 1, 2, 4]; // old -> new label
        let rows: Vec<Vec<u32>> = (1..=5u8)
            .map(|i| {
                (1..=5u8)
                    .map(|j| {
                        let oi = perm.iter().position(|&p| p == i).unwrap() as u8 + 1;
                        let oj = perm.iter().position(|&p| p == j).unwrap() as u8 + 1;
                        d5.m(oi, oj)
                    })
                    .collect()
            })
            .collect();
        let scrambled = CoxeterMatrix::from_rows(&rows).unwrap();
        let report = classify_finite(&scrambled, scrambled.full_set()).unwrap();
        assert_eq!(report.components.len(), 1);
        let comp = &report.components[0];
        assert_eq!(comp.tag, TypeTag::D(5));
        for k in 1..=5u8 {
            for l in 1..=5u8 {
                assert_eq!(
                    d5.m(k, l),
                    scrambled.m(comp.labels[k as usize - 1], comp.labels[l as usize - 1])
                );
            }
        }
    }

    #[test]
    fn rejects_infinite_types() {
        // Affine Ã2: a 3-cycle of simple bonds.
        let tri = CoxeterMatrix::from_rows(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(classify_finite(&tri, tri.full_set()).is_none());
        assert_eq!(finite_subsets(&tri, 12).unwrap().len(), 7);

        let inf = CoxeterMatrix::parse("A1").unwrap().coproduct(&CoxeterMatrix::parse("A1").unwrap());
        assert!(classify_finite(&inf, inf.full_set()).is_none());
        assert_eq!(finite_subsets(&inf, 12).unwrap().len(), 3);

        // Affine C̃2 (two 4-bonds), affine B̃3 (branch plus a 4-bond), a
        // 7-bond in rank 3, affine G̃2, the degree-4 star D̃4, and Ẽ6
        // (arms 2,2,2) must all be rejected.
        for rows in [
            vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]],
            vec![vec![1, 3, 2, 2], vec![3, 1, 4, 3], vec![2, 4, 1, 2], vec![2, 3, 2, 1]],
            vec![vec![1, 7, 2], vec![7, 1, 3], vec![2, 3, 1]],
            vec![vec![1, 6, 2], vec![6, 1, 3], vec![2, 3, 1]],
            vec![
                vec![1, 3, 2, 2, 2],
                vec![3, 1, 3, 3, 3],
                vec![2, 3, 1, 2, 2],
                vec![2, 3, 2, 1, 2],
                vec![2, 3, 2, 2, 1],
            ],
        ] {
            let m = CoxeterMatrix::from_rows(&rows).unwrap();
            assert!(classify_finite(&m, m.full_set()).is_none(), "{m:?}");
        }
        // Ẽ6: branch with three arms of length 2.
        let e6 = CoxeterMatrix::parse("E6").unwrap();
        let e6t = {
            let mut rows: Vec<Vec<u32>> = (1..=7u8)
                .map(|i| (1..=7u8).map(|j| if i == j { 1 } else { 2 }).collect())
                .collect();
            for i in 1..=6u8 {
                for j in 1..=6u8 {
                    rows[i as usize - 1][j as usize - 1] = e6.m(i, j);
                }
            }
            rows[6 - 1][7 - 1] = 3; // attach the affine vertex to the E6 branch tip
            rows[7 - 1][6 - 1] = 3;
            CoxeterMatrix::from_rows(&rows).unwrap()
        };
        assert!(classify_finite(&e6t, e6t.full_set()).is_none());
    }

    #[test]
    fn automorphism_groups() {
        let a3 = CoxeterMatrix::parse("A3").unwrap();
        assert_eq!(
            diagram_automorphisms(&a3, 12).unwrap(),
            vec![vec![1, 2, 3], vec![3, 2, 1]]
        );
        let d4 = CoxeterMatrix::parse("D4").unwrap();
        assert_eq!(diagram_automorphisms(&d4, 12).unwrap().len(), 6);
        let b3 = CoxeterMatrix::parse("B3").unwrap();
        assert_eq!(diagram_automorphisms(&b3, 12).unwrap(), vec![vec![1, 2, 3]]);
        let e6 = CoxeterMatrix::parse("E6").unwrap();
        let autos = diagram_automorphisms(&e6, 12).unwrap();
        assert_eq!(autos.len(), 2);
        assert_eq!(autos[1], vec![5, 4, 3, 2, 1, 6]);
        let d5 = CoxeterMatrix::parse("D5").unwrap();
        let autos = diagram_automorphisms(&d5, 12).unwrap();
        assert_eq!(autos, vec![vec![1, 2, 3, 4, 5], vec![1, 2, 3, 5, 4]]);
    }

    #[test]
    fn finite_subsets_of_a3() {
        let a3 = CoxeterMatrix::parse("A3").unwrap();
        assert_eq!(finite_subsets(&a3, 12).unwrap().len(), 8);
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(TypeTag::D(5).group_order(), 1920);
        assert_eq!(TypeTag::A(4).group_order(), 120);
        assert_eq!(TypeTag::E(6).positive_roots(), 36);
        assert_eq!(TypeTag::H(4).coxeter_number(), 30);
        assert_eq!(TypeTag::D(4).coxeter_number(), 6);
    }
}
