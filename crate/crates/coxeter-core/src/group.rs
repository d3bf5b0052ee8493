//! Exact element arithmetic in finite-type Coxeter groups.
//!
//! A [`GroupContext`] realizes a finite-type matrix through the exact
//! reflection representation: crystallographic and pentagonal components
//! share one block matrix over [`Scalar`], while `I₂(m)` components with
//! `m ∉ {2,…,6}` are handled by closed-form dihedral normal forms
//! (alternating words). Elements carry the acting matrix *and* its inverse so
//! both descent sets cost only a column sign test; lengths are maintained
//! incrementally through descent checks, never recomputed.

use std::collections::HashSet;

use crate::classify::{classify_finite, FiniteTypeReport, TypeTag};
use crate::matrix::CoxeterMatrix;
use crate::scalar::{Scalar, ONE, PHI, ZERO};
use crate::subset::{self, Subset};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

#[derive(Debug)]
struct DihComp {
    labels: [u8; 2],
    m: u32,
}

/// Immutable realization data for one finite-type matrix; all element
/// operations go through it. Safe to share across threads.
#[derive(Debug)]
pub struct GroupContext {
    matrix: CoxeterMatrix,
    report: FiniteTypeReport,
    mat_labels: Vec<u8>,
    mat_pos: Vec<Option<u8>>,
    coeff: Vec<Scalar>, // k×k reflection coefficients, c[p][q] with s_p(α_q) = α_q − c_pq α_p
    dih: Vec<DihComp>,
    dih_pos: Vec<Option<(u8, u8)>>,
}

/// A group element: images of the simple roots (and the inverse's), plus a
/// normal form per dihedral component, plus the cached length.
#[derive(Debug, Clone)]
pub struct Element {
    mat: Vec<Scalar>,
    inv: Vec<Scalar>,
    dih: Vec<(u32, u8)>, // (length, first letter position 1|2; 0 when trivial)
    len: u32,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && self.dih == other.dih
    }
}

impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
        self.dih.hash(state);
    }
}

impl Element {
    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }
}

fn other(t: u8) -> u8 {
    3 - t
}

impl GroupContext {
    /// Builds the realization. Fails unless the whole matrix is of finite
    /// type; callers working inside an infinite matrix must first restrict
    /// to a finite parabolic submatrix.
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        let report = classify_finite(&matrix, matrix.full_set()).ok_or_else(|| {
            Error::NotFiniteType(format!("{matrix:?} admits no finite-type realization"))
        })?;
        let n = matrix.rank() as usize;
        let mut mat_labels = Vec::new();
        let mut dih = Vec::new();
        for comp in &report.components {
            match comp.tag {
                TypeTag::I2(m) if !(2..=6).contains(&m) => {
                    let mut ls = comp.labels.clone();
                    ls.sort_unstable();
                    dih.push(DihComp { labels: [ls[0], ls[1]], m });
                }
                _ => mat_labels.extend(comp.labels.iter().copied()),
            }
        }
        mat_labels.sort_unstable();
        let mut mat_pos = vec![None; n + 1];
        for (p, &l) in mat_labels.iter().enumerate() {
            mat_pos[l as usize] = Some(p as u8);
        }
        let mut dih_pos = vec![None; n + 1];
        for (d, comp) in dih.iter().enumerate() {
            dih_pos[comp.labels[0] as usize] = Some((d as u8, 1));
            dih_pos[comp.labels[1] as usize] = Some((d as u8, 2));
        }

        let k = mat_labels.len();
        let mut coeff = vec![ZERO; k * k];
        for p in 0..k {
            coeff[p * k + p] = Scalar::int(2);
            for q in p + 1..k {
                let bond = matrix.m(mat_labels[p], mat_labels[q]);
                let (cpq, cqp) = match bond {
                    2 => (ZERO, ZERO),
                    3 => (Scalar::int(-1), Scalar::int(-1)),
                    4 => (Scalar::int(-1), Scalar::int(-2)),
                    5 => (-PHI, -PHI),
                    6 => (Scalar::int(-1), Scalar::int(-3)),
                    _ => unreachable!("bond {bond} cannot appear in a matrix block"),
                };
                coeff[p * k + q] = cpq;
                coeff[q * k + p] = cqp;
            }
        }

        Ok(GroupContext { matrix, report, mat_labels, mat_pos, coeff, dih, dih_pos })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn report(&self) -> &FiniteTypeReport {
        &self.report
    }

    pub fn rank(&self) -> u8 {
        self.matrix.rank()
    }

    fn k(&self) -> usize {
        self.mat_labels.len()
    }

    fn c(&self, p: usize, q: usize) -> Scalar {
        self.coeff[p * self.k() + q]
    }

    fn check_label(&self, i: u8) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("generator label {i} out of range 1..={}", self.rank())))
        }
    }

    pub fn identity(&self) -> Element {
        let k = self.k();
        let mut mat = vec![ZERO; k * k];
        for p in 0..k {
            mat[p * k + p] = ONE;
        }
        Element { inv: mat.clone(), mat, dih: vec![(0, 0); self.dih.len()], len: 0 }
    }

    pub fn gen(&self, i: u8) -> Result<Element> {
        self.check_label(i)?;
        let mut w = self.identity();
        self.gen_right_in_place(&mut w, i);
        Ok(w)
    }

    pub fn is_right_descent(&self, w: &Element, i: u8) -> bool {
        if let Some(p) = self.mat_pos[i as usize] {
            self.col_negative(&w.mat, p as usize)
        } else {
            let (d, t) = self.dih_pos[i as usize].expect("label in range");
            let (len, first) = w.dih[d as usize];
            let m = self.dih[d as usize].m;
            len > 0 && (len == m || t == dih_last(len, first))
        }
    }

    pub fn is_left_descent(&self, w: &Element, i: u8) -> bool {
        if let Some(p) = self.mat_pos[i as usize] {
            self.col_negative(&w.inv, p as usize)
        } else {
            let (d, t) = self.dih_pos[i as usize].expect("label in range");
            let (len, first) = w.dih[d as usize];
            let m = self.dih[d as usize].m;
            len > 0 && (len == m || t == first)
        }
    }

    fn col_negative(&self, mat: &[Scalar], p: usize) -> bool {
        let k = self.k();
        for r in 0..k {
            let s = mat[r * k + p].signum();
            if s != 0 {
                return s < 0;
            }
        }
        unreachable!("zero column in an invertible reflection matrix")
    }

    pub fn right_descents(&self, w: &Element) -> Subset {
        self.matrix.gens().filter(|&i| self.is_right_descent(w, i)).fold(0, |s, i| s | subset::singleton(i))
    }

    pub fn left_descents(&self, w: &Element) -> Subset {
        self.matrix.gens().filter(|&i| self.is_left_descent(w, i)).fold(0, |s, i| s | subset::singleton(i))
    }

    /// In-place `w ← w·s_i`, adjusting the cached length by the descent test.
    pub fn gen_right_in_place(&self, w: &mut Element, i: u8) {
        let desc = self.is_right_descent(w, i);
        if let Some(p) = self.mat_pos[i as usize] {
            let (p, k) = (p as usize, self.k());
            // mat ← mat · M_{s_p}: col_q −= c_pq·col_p (q ≠ p), then col_p ← −col_p.
            for q in 0..k {
                if q == p {
                    continue;
                }
                let c = self.c(p, q);
                if c.is_zero() {
                    continue;
                }
                for r in 0..k {
                    let t = w.mat[r * k + p] * c;
                    w.mat[r * k + q] -= t;
                }
            }
            for r in 0..k {
                w.mat[r * k + p] = -w.mat[r * k + p];
            }
            // inv ← M_{s_p} · inv: row_p ← row_p − Σ_q c_pq·row_q.
            for j in 0..k {
                let mut acc = ZERO;
                for q in 0..k {
                    let c = self.c(p, q);
                    if !c.is_zero() {
                        acc += c * w.inv[q * k + j];
                    }
                }
                w.inv[p * k + j] -= acc;
            }
        } else {
            let (d, t) = self.dih_pos[i as usize].expect("label in range");
            let m = self.dih[d as usize].m;
            w.dih[d as usize] = dih_step_right(w.dih[d as usize], t, m);
        }
        w.len = if desc { w.len - 1 } else { w.len + 1 };
    }

    /// In-place `w ← s_i·w`.
    pub fn gen_left_in_place(&self, w: &mut Element, i: u8) {
        let desc = self.is_left_descent(w, i);
        if let Some(p) = self.mat_pos[i as usize] {
            let (p, k) = (p as usize, self.k());
            // mat ← M_{s_p} · mat; inv ← inv · M_{s_p}.
            for j in 0..k {
                let mut acc = ZERO;
                for q in 0..k {
                    let c = self.c(p, q);
                    if !c.is_zero() {
                        acc += c * w.mat[q * k + j];
                    }
                }
                w.mat[p * k + j] -= acc;
            }
            for q in 0..k {
                if q == p {
                    continue;
                }
                let c = self.c(p, q);
                if c.is_zero() {
                    continue;
                }
                for r in 0..k {
                    let t = w.inv[r * k + p] * c;
                    w.inv[r * k + q] -= t;
                }
            }
            for r in 0..k {
                w.inv[r * k + p] = -w.inv[r * k + p];
            }
        } else {
            let (d, t) = self.dih_pos[i as usize].expect("label in range");
            let m = self.dih[d as usize].m;
            w.dih[d as usize] = dih_step_left(w.dih[d as usize], t, m);
        }
        w.len = if desc { w.len - 1 } else { w.len + 1 };
    }

    pub fn mul_gen_right(&self, w: &Element, i: u8) -> Element {
        let mut x = w.clone();
        self.gen_right_in_place(&mut x, i);
        x
    }

    pub fn mul_gen_left(&self, w: &Element, i: u8) -> Element {
        let mut x = w.clone();
        self.gen_left_in_place(&mut x, i);
        x
    }

    pub fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut w = u.clone();
        for i in self.canonical_word(v) {
            self.gen_right_in_place(&mut w, i);
        }
        w
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let dih = w
            .dih
            .iter()
            .zip(&self.dih)
            .map(|(&(len, first), comp)| {
                if len == 0 {
                    (0, 0)
                } else if len == comp.m {
                    (len, 1) // the longest element is an involution, kept normalized
                } else {
                    (len, dih_last(len, first))
                }
            })
            .collect();
        Element { mat: w.inv.clone(), inv: w.mat.clone(), dih, len: w.len }
    }

    /// The lexicographically least reduced word (repeated min-descent
    /// extraction on the left).
    pub fn canonical_word(&self, w: &Element) -> Vec<u8> {
        let mut x = w.clone();
        let mut out = Vec::with_capacity(w.len as usize);
        while x.len > 0 {
            let i = self
                .matrix
                .gens()
                .find(|&i| self.is_left_descent(&x, i))
                .expect("nontrivial element has a left descent");
            self.gen_left_in_place(&mut x, i);
            out.push(i);
        }
        out
    }

    /// Folds a word into an element; the flag reports whether it was reduced.
    pub fn from_word(&self, word: &[u8]) -> Result<(Element, bool)> {
        let mut w = self.identity();
        let mut reduced = true;
        for &i in word {
            self.check_label(i)?;
            let before = w.len;
            self.gen_right_in_place(&mut w, i);
            if w.len < before {
                reduced = false;
            }
        }
        Ok((w, reduced))
    }

    /// Letters of the canonical word.
    pub fn support(&self, w: &Element) -> Subset {
        subset::from_members(self.canonical_word(w))
    }

    /// `c_{[a,b]}` (ascending) or `c̄_{[a,b]}` (descending); identity when `a > b`.
    pub fn coxeter_element(&self, a: u8, b: u8, dir: Direction) -> Result<Element> {
        let mut w = self.identity();
        if a > b {
            return Ok(w);
        }
        self.check_label(a)?;
        self.check_label(b)?;
        let labels: Vec<u8> = match dir {
            Direction::Ascending => (a..=b).collect(),
            Direction::Descending => (a..=b).rev().collect(),
        };
        for i in labels {
            self.gen_right_in_place(&mut w, i);
        }
        Ok(w)
    }

    pub fn element_order(&self, w: &Element) -> u32 {
        let id = self.identity();
        if *w == id {
            return 1;
        }
        let mut x = w.clone();
        let mut ord = 1;
        while x != id {
            x = self.mul(&x, w);
            ord += 1;
            assert!(ord <= 10_000, "element order diverged");
        }
        ord
    }

    /// BFS closure of `{e}` under right multiplication; deterministic order
    /// (by length, then discovery). Errors when the group outgrows `cap`.
    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<Element>> {
        let id = self.identity();
        let mut order = vec![id.clone()];
        let mut seen: HashSet<Element> = HashSet::from([id]);
        let mut head = 0;
        while head < order.len() {
            let w = order[head].clone();
            head += 1;
            for i in self.matrix.gens() {
                let x = self.mul_gen_right(&w, i);
                if !seen.contains(&x) {
                    if order.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: format!("enumerate_group on {}", self.report.type_string()),
                            cap,
                        });
                    }
                    seen.insert(x.clone());
                    order.push(x);
                }
            }
        }
        Ok(order)
    }
}

fn dih_last(len: u32, first: u8) -> u8 {
    if len % 2 == 1 {
        first
    } else {
        other(first)
    }
}

fn dih_step_right(state: (u32, u8), t: u8, m: u32) -> (u32, u8) {
    let (len, first) = state;
    if len == 0 {
        return (1, t);
    }
    if len == m {
        // Both letters are descents of w∘; peel from a word ending in t.
        let nf = if m % 2 == 1 { t } else { other(t) };
        return (m - 1, nf);
    }
    if t == dih_last(len, first) {
        (len - 1, if len == 1 { 0 } else { first })
    } else {
        let nl = len + 1;
        (nl, if nl == m { 1 } else { first })
    }
}

fn dih_step_left(state: (u32, u8), t: u8, m: u32) -> (u32, u8) {
    let (len, first) = state;
    if len == 0 {
        return (1, t);
    }
    if len == m {
        return (m - 1, other(t));
    }
    if t == first {
        (len - 1, if len == 1 { 0 } else { other(first) })
    } else {
        let nl = len + 1;
        (nl, if nl == m { 1 } else { t })
    }
}

/// Order of the Coxeter element of the connected finite-type subset `J`.
pub fn coxeter_number(m: &CoxeterMatrix, j: Subset) -> Result<u32> {
    if j == 0 || !m.is_connected(j) {
        return Err(Error::Invalid(format!("{} is not connected", subset::display(j))));
    }
    let (sub, _) = m.submatrix(j)?;
    let rank = sub.rank();
    let ctx = GroupContext::new(sub)?;
    let c = ctx.coxeter_element(1, rank, Direction::Ascending)?;
    Ok(ctx.element_order(&c))
}
