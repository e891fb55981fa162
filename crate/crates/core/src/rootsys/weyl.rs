use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

use super::datum::{AffineRoot, FiniteRootDatum};

/// Element of the affine Weyl group in the canonical form w = t_lambda * v,
/// with v in the finite Weyl group (stored as its matrix on root coordinates)
/// and lambda in the coroot lattice.
///
/// The canonical form is independent of any word for w; reduced words are
/// cached separately by [`WeylGroup`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylEl {
    /// Column j is the coefficient vector of v(alpha_j).
    pub v: Vec<Vec<i64>>,
    pub lambda: Vec<i64>,
}

impl WeylEl {
    pub fn identity(rank: usize) -> Self {
        let mut v = vec![vec![0; rank]; rank];
        for (i, col) in v.iter_mut().enumerate() {
            col[i] = 1;
        }
        WeylEl { v, lambda: vec![0; rank] }
    }

    fn apply_matrix(&self, gamma: &[i64]) -> Vec<i64> {
        let rank = self.lambda.len();
        let mut out = vec![0; rank];
        for (j, c) in gamma.iter().enumerate() {
            for i in 0..rank {
                out[i] += c * self.v[j][i];
            }
        }
        out
    }

    /// Action on an affine root: (t_lambda v)(gamma + k delta)
    /// = v(gamma) + (k - <v(gamma), lambda>) delta.
    pub fn act(&self, datum: &FiniteRootDatum, beta: &AffineRoot) -> AffineRoot {
        let g = self.apply_matrix(&beta.gamma);
        let level = beta.level - datum.pair(&g, &self.lambda);
        AffineRoot { gamma: g, level }
    }

    pub fn compose(&self, other: &WeylEl) -> WeylEl {
        // t_a u * t_b w = t_{a + u(b)} (u w)
        let rank = self.lambda.len();
        let ub = self.apply_matrix(&other.lambda);
        let lambda: Vec<i64> = self.lambda.iter().zip(&ub).map(|(a, b)| a + b).collect();
        let mut v = vec![vec![0; rank]; rank];
        for j in 0..rank {
            let img = self.apply_matrix(&other.v[j]);
            v[j] = img;
        }
        WeylEl { v, lambda }
    }

    pub fn inverse(&self) -> WeylEl {
        let rank = self.lambda.len();
        let vinv = invert_unimodular(&self.v, rank);
        let el = WeylEl { v: vinv, lambda: vec![0; rank] };
        let ml = el.apply_matrix(&self.lambda);
        WeylEl {
            v: el.v,
            lambda: ml.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylEl::identity(self.lambda.len())
    }
}

fn invert_unimodular(v: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    match rank {
        1 => {
            assert!(v[0][0] == 1 || v[0][0] == -1);
            vec![vec![v[0][0]]]
        }
        2 => {
            let (a, c) = (v[0][0], v[0][1]);
            let (b, d) = (v[1][0], v[1][1]);
            let det = a * d - b * c;
            assert!(det == 1 || det == -1);
            vec![vec![d / det, -c / det], vec![-b / det, a / det]]
        }
        _ => unimplemented!("rank > 2"),
    }
}

/// The affine Weyl group of a finite root datum, enumerated by length shells.
pub struct WeylGroup {
    pub datum: FiniteRootDatum,
    simples: Vec<WeylEl>,
    /// canonical form -> (shortest word, length)
    table: HashMap<WeylEl, (Vec<usize>, usize)>,
    /// shells[l] = elements of length l, in deterministic BFS order
    pub shells: Vec<Vec<WeylEl>>,
}

impl WeylGroup {
    pub fn new(datum: FiniteRootDatum) -> Self {
        let rank = datum.rank;
        let mut simples = Vec::new();
        for node in 0..datum.affine_nodes() {
            simples.push(simple_reflection(&datum, node));
        }
        let mut table = HashMap::new();
        let e = WeylEl::identity(rank);
        table.insert(e.clone(), (Vec::new(), 0));
        WeylGroup {
            datum,
            simples,
            table,
            shells: vec![vec![e]],
        }
    }

    pub fn simple(&self, node: usize) -> &WeylEl {
        &self.simples[node]
    }

    /// Extends the BFS enumeration up to the given word length.
    pub fn enumerate_to(&mut self, length: usize) {
        while self.shells.len() <= length {
            let last = self.shells.last().unwrap().clone();
            let cur_len = self.shells.len();
            let mut shell = Vec::new();
            for w in &last {
                for (s_idx, s) in self.simples.iter().enumerate() {
                    let next = w.compose(s);
                    if !self.table.contains_key(&next) {
                        let mut word = self.table[w].0.clone();
                        word.push(s_idx);
                        self.table.insert(next.clone(), (word, cur_len));
                        shell.push(next);
                    }
                }
            }
            self.shells.push(shell);
        }
    }

    /// Word length from the BFS table; enumerates further if needed.
    pub fn length(&mut self, w: &WeylEl) -> usize {
        if let Some((_, l)) = self.table.get(w) {
            return *l;
        }
        // enumerate until found; the geometric length bound guarantees
        // termination for genuine group elements
        let bound = self.length_by_roots(w);
        self.enumerate_to(bound);
        self.table
            .get(w)
            .unwrap_or_else(|| panic!("element not found at its root-theoretic length {bound}"))
            .1
    }

    /// l(w) = #{beta > 0 : w(beta) < 0}, computed directly from the roots.
    pub fn length_by_roots(&self, w: &WeylEl) -> usize {
        let mut count = 0;
        for gamma in self.datum.all_roots() {
            // levels k with gamma + k delta positive and image negative are
            // bounded by the pairing of v(gamma) with lambda
            let img0 = w.act(
                &self.datum,
                &AffineRoot { gamma: gamma.clone(), level: 0 },
            );
            // image level of gamma + k delta is img0.level + k
            let start = if gamma.iter().sum::<i64>() > 0 { 0 } else { 1 };
            let mut k = start;
            loop {
                let lvl = img0.level + k;
                if lvl > 0 {
                    break;
                }
                let img = AffineRoot { gamma: img0.gamma.clone(), level: lvl };
                if !img.is_positive() {
                    count += 1;
                }
                k += 1;
            }
        }
        count
    }

    pub fn reduced_word(&mut self, w: &WeylEl) -> Vec<usize> {
        self.length(w);
        self.table[w].0.clone()
    }

    /// J_w = set of affine nodes whose simple root is sent to a positive root.
    pub fn jw(&self, w: &WeylEl) -> BTreeSet<usize> {
        (0..self.datum.affine_nodes())
            .filter(|&node| {
                w.act(&self.datum, &self.datum.affine_simple(node)).is_positive()
            })
            .collect()
    }

    /// Bruhat order via the lifting property on a reduced word of w.
    pub fn bruhat_leq(&mut self, v: &WeylEl, w: &WeylEl) -> bool {
        let lv = self.length(v);
        let lw = self.length(w);
        if lv > lw {
            return false;
        }
        if v.is_identity() {
            return true;
        }
        if lv == lw {
            return v == w;
        }
        let word = self.reduced_word(w);
        let s_idx = *word.last().unwrap();
        let s = self.simples[s_idx].clone();
        let ws = w.compose(&s);
        let vs = v.compose(&s);
        if self.length(&vs) < lv {
            self.bruhat_leq(&vs, &ws)
        } else {
            self.bruhat_leq(v, &ws)
        }
    }

    /// Minimal-length representative of the coset w W_J.
    pub fn coset_min_rep(&mut self, w: &WeylEl, j: &BTreeSet<usize>) -> WeylEl {
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        loop {
            let mut progressed = false;
            for &node in j {
                let cand = cur.compose(&self.simples[node]);
                let cl = self.length(&cand);
                if cl < len {
                    cur = cand;
                    len = cl;
                    progressed = true;
                    break;
                }
            }
            if !progressed {
                return cur;
            }
        }
    }

    /// All elements of length <= bound, shell by shell.
    pub fn elements_to(&mut self, bound: usize) -> Vec<WeylEl> {
        self.enumerate_to(bound);
        self.shells[..=bound].iter().flatten().cloned().collect()
    }
}

fn simple_reflection(datum: &FiniteRootDatum, node: usize) -> WeylEl {
    let rank = datum.rank;
    if node == 0 {
        // s_0 = t_{theta^vee} s_theta (coroot coordinates = root coordinates
        // in simply-laced types)
        let v = reflection_matrix(datum, &datum.highest);
        WeylEl { v, lambda: datum.highest.clone() }
    } else {
        let mut alpha = vec![0; rank];
        alpha[node - 1] = 1;
        let v = reflection_matrix(datum, &alpha);
        WeylEl { v, lambda: vec![0; rank] }
    }
}

/// Matrix of the reflection in a finite root, acting on root coordinates.
fn reflection_matrix(datum: &FiniteRootDatum, root: &[i64]) -> Vec<Vec<i64>> {
    let rank = datum.rank;
    let mut v = vec![vec![0; rank]; rank];
    for j in 0..rank {
        let mut alpha = vec![0; rank];
        alpha[j] = 1;
        // s_root(alpha_j) = alpha_j - <alpha_j, root^vee> root
        let pairing = datum.pair(&alpha, root);
        let mut img = alpha;
        for i in 0..rank {
            img[i] -= pairing * root[i];
        }
        v[j] = img;
    }
    v
}

/// A finite Bruhat-downward-closed set of affine Weyl elements (the I-orbit
/// picture of an element of Omega).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerSetY {
    pub elements: Vec<WeylEl>,
}

impl LowerSetY {
    /// Smallest lower set containing the given elements.
    pub fn closure(group: &mut WeylGroup, generators: &[WeylEl]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Argument("lower set needs at least one generator".into()));
        }
        let max_len = generators
            .iter()
            .map(|w| group.length(w))
            .max()
            .unwrap();
        let mut elements = Vec::new();
        for w in group.elements_to(max_len) {
            if generators.iter().any(|g| group.bruhat_leq(&w, g)) {
                elements.push(w);
            }
        }
        Ok(LowerSetY { elements })
    }

    /// All elements of length <= bound form a lower set.
    pub fn ball(group: &mut WeylGroup, bound: usize) -> Self {
        LowerSetY { elements: group.elements_to(bound) }
    }

    pub fn contains(&self, w: &WeylEl) -> bool {
        self.elements.contains(w)
    }

    pub fn is_downward_closed(&self, group: &mut WeylGroup) -> bool {
        let max_len = self
            .elements
            .iter()
            .map(|w| group.length(w))
            .max()
            .unwrap_or(0);
        for w in group.elements_to(max_len) {
            for s in self.elements.clone() {
                if group.bruhat_leq(&w, &s) && !self.contains(&w) {
                    return false;
                }
            }
        }
        true
    }

    /// Distinct minimal-length representatives of the cosets w W_J met by
    /// this set, used to enumerate the image Y_P in G/P_J.
    pub fn coset_min_reps(&self, group: &mut WeylGroup, j: &BTreeSet<usize>) -> Vec<WeylEl> {
        let mut reps: Vec<WeylEl> = Vec::new();
        for w in &self.elements {
            let m = group.coset_min_rep(w, j);
            if !reps.contains(&m) {
                reps.push(m);
            }
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootKind;

    fn group(kind: RootKind) -> WeylGroup {
        WeylGroup::new(FiniteRootDatum::new(kind))
    }

    #[test]
    fn simple_reflection_action_a1() {
        let g = group(RootKind::A1);
        let d = &g.datum;
        let a1 = d.affine_simple(1);
        let a0 = d.affine_simple(0);
        let s1 = g.simple(1);
        // s1(alpha_1) = -alpha_1, s1(alpha_0) = alpha_1 + delta
        assert_eq!(s1.act(d, &a1), AffineRoot { gamma: vec![-1], level: 0 });
        assert_eq!(s1.act(d, &a0), AffineRoot { gamma: vec![1], level: 1 });
        // identity fixes alpha_1
        let e = WeylEl::identity(1);
        assert_eq!(e.act(d, &a1), a1);
    }

    #[test]
    fn action_is_a_group_action() {
        for kind in [RootKind::A1, RootKind::A2] {
            let mut g = group(kind);
            let els = g.elements_to(4);
            let d = g.datum.clone();
            let roots: Vec<AffineRoot> = d
                .all_roots()
                .into_iter()
                .flat_map(|gamma| (-2..=2).map(move |l| AffineRoot { gamma: gamma.clone(), level: l }))
                .collect();
            for w1 in els.iter().take(12) {
                for w2 in els.iter().take(12) {
                    let w12 = w1.compose(w2);
                    for beta in &roots {
                        assert_eq!(w12.act(&d, beta), w1.act(&d, &w2.act(&d, beta)));
                    }
                }
                // inverse really inverts
                let winv = w1.inverse();
                assert!(w1.compose(&winv).is_identity());
            }
        }
    }

    #[test]
    fn bfs_length_matches_inversion_count() {
        for kind in [RootKind::A1, RootKind::A2] {
            let mut g = group(kind);
            for w in g.elements_to(8) {
                let by_word = g.length(&w);
                assert_eq!(by_word, g.length_by_roots(&w), "length mismatch for {w:?}");
            }
        }
    }

    #[test]
    fn jw_is_full_only_at_identity() {
        for kind in [RootKind::A1, RootKind::A2] {
            let mut g = group(kind);
            let full: BTreeSet<usize> = (0..g.datum.affine_nodes()).collect();
            for w in g.elements_to(8) {
                assert_eq!(g.jw(&w) == full, w.is_identity());
            }
        }
    }

    #[test]
    fn jw_examples_a1() {
        let mut g = group(RootKind::A1);
        g.enumerate_to(2);
        let s1 = g.simple(1).clone();
        let s0 = g.simple(0).clone();
        assert_eq!(g.jw(&s1), BTreeSet::from([0]));
        let s0s1 = s0.compose(&s1);
        assert_eq!(g.jw(&s0s1), BTreeSet::from([1]));
    }

    /// Brute-force subword oracle for the Bruhat order.
    fn bruhat_by_subwords(g: &mut WeylGroup, v: &WeylEl, w: &WeylEl) -> bool {
        let word = g.reduced_word(w);
        let lv = g.length(v);
        let n = word.len();
        for mask in 0u32..(1 << n) {
            if (mask.count_ones() as usize) != lv {
                continue;
            }
            let mut prod = WeylEl::identity(g.datum.rank);
            for (i, &s) in word.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    prod = prod.compose(g.simple(s));
                }
            }
            if prod == *v {
                return true;
            }
        }
        false
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for kind in [RootKind::A1, RootKind::A2] {
            let mut g = group(kind);
            let els = g.elements_to(5);
            for v in &els {
                for w in &els {
                    let fast = g.bruhat_leq(v, w);
                    let slow = bruhat_by_subwords(&mut g, v, w);
                    assert_eq!(fast, slow, "bruhat mismatch {v:?} <= {w:?}");
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let mut g = group(RootKind::A1);
        g.enumerate_to(3);
        let e = WeylEl::identity(1);
        let s0 = g.simple(0).clone();
        let s1 = g.simple(1).clone();
        assert!(g.bruhat_leq(&e, &s0));
        assert!(!g.bruhat_leq(&s0, &s1));
        let s0s1s0 = s0.compose(&s1).compose(&s0);
        // s1 is not a subword of the alternating word 010
        assert!(!g.bruhat_leq(&s1, &s0s1s0));
        assert!(g.bruhat_leq(&s0, &s0s1s0));
    }

    #[test]
    fn lower_set_closure_is_downward_closed() {
        let mut g = group(RootKind::A2);
        let w = g.simple(0).compose(g.simple(1));
        let y = LowerSetY::closure(&mut g, &[w]).unwrap();
        assert!(y.is_downward_closed(&mut g));
        assert!(y.contains(&WeylEl::identity(2)));
    }
}
