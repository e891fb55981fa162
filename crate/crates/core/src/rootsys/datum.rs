use std::collections::BTreeSet;

use num::rational::Ratio;

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    A1,
    A2,
}

impl RootKind {
    pub fn parse(label: &str) -> Result<Self> {
        match label.trim().to_ascii_lowercase().as_str() {
            "a1" => Ok(RootKind::A1),
            "a2" => Ok(RootKind::A2),
            other => Err(Error::Argument(format!("unsupported root system `{other}`"))),
        }
    }
}

/// Finite root datum of a simply-laced rank <= 2 system, together with the
/// marks of the affine extension (index 0 is the affine node, a_0 = 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRootDatum {
    pub kind: RootKind,
    pub rank: usize,
    /// cartan[i][j] = <alpha_j, alpha_i^vee>; symmetric in these types.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots as coefficient vectors over the simple roots.
    pub positive: Vec<Vec<i64>>,
    /// Highest root coefficients.
    pub highest: Vec<i64>,
    /// marks[0] = 1 (affine node), marks[i] = coefficient of alpha_i in delta.
    pub marks: Vec<i64>,
}

impl FiniteRootDatum {
    pub fn new(kind: RootKind) -> Self {
        match kind {
            RootKind::A1 => FiniteRootDatum {
                kind,
                rank: 1,
                cartan: vec![vec![2]],
                positive: vec![vec![1]],
                highest: vec![1],
                marks: vec![1, 1],
            },
            RootKind::A2 => FiniteRootDatum {
                kind,
                rank: 2,
                cartan: vec![vec![2, -1], vec![-1, 2]],
                positive: vec![vec![1, 0], vec![0, 1], vec![1, 1]],
                highest: vec![1, 1],
                marks: vec![1, 1, 1],
            },
        }
    }

    /// Number of affine nodes, |Delta-tilde| = rank + 1.
    pub fn affine_nodes(&self) -> usize {
        self.rank + 1
    }

    /// All finite roots (positive and negative).
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|g| neg(g)));
        out
    }

    /// <gamma, lambda> for a root gamma and a coroot-lattice vector lambda.
    pub fn pair(&self, gamma: &[i64], lambda: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ci) in gamma.iter().enumerate() {
            for (j, mj) in lambda.iter().enumerate() {
                s += ci * mj * self.cartan[i][j];
            }
        }
        s
    }

    /// The affine simple root with the given node index.
    pub fn affine_simple(&self, node: usize) -> AffineRoot {
        if node == 0 {
            AffineRoot {
                gamma: neg(&self.highest),
                level: 1,
            }
        } else {
            let mut g = vec![0; self.rank];
            g[node - 1] = 1;
            AffineRoot { gamma: g, level: 0 }
        }
    }

    pub fn is_finite_root(&self, gamma: &[i64]) -> bool {
        self.positive.iter().any(|g| g == gamma || neg(g) == gamma)
    }
}

pub fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// Affine root beta = gamma + level * delta, gamma a nonzero finite root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub gamma: Vec<i64>,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(datum: &FiniteRootDatum, gamma: Vec<i64>, level: i64) -> Result<Self> {
        if !datum.is_finite_root(&gamma) {
            return Err(Error::Structural(format!(
                "finite part {gamma:?} is not a root of the datum"
            )));
        }
        Ok(AffineRoot { gamma, level })
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.gamma.iter().sum::<i64>() > 0)
    }

    /// beta - r*delta, the integer level shift.
    pub fn shift(&self, r: i64) -> AffineRoot {
        AffineRoot {
            gamma: self.gamma.clone(),
            level: self.level - r,
        }
    }
}

/// A standard parahoric, indexed by a proper subset J of the affine nodes,
/// carried together with the (barycentric) facet point x_J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParahoricLabel {
    pub j: BTreeSet<usize>,
    /// Values alpha_i(x_J) of the finite simple roots at the facet point.
    pub x_finite: Vec<Rat>,
}

impl ParahoricLabel {
    pub fn new(datum: &FiniteRootDatum, j: BTreeSet<usize>) -> Result<Self> {
        let nodes = datum.affine_nodes();
        if j.iter().any(|&i| i >= nodes) {
            return Err(Error::Argument(format!("node index out of range in {j:?}")));
        }
        if j.len() >= nodes {
            return Err(Error::Argument(
                "J must be a proper subset of the affine simple roots".into(),
            ));
        }
        let m: i64 = (0..nodes).filter(|i| !j.contains(i)).map(|i| datum.marks[i]).sum();
        let value = |node: usize| -> Rat {
            if j.contains(&node) {
                Ratio::from_integer(0)
            } else {
                Ratio::new(1, m)
            }
        };
        let x_finite: Vec<Rat> = (1..nodes).map(value).collect();
        // alpha_0(x) = 1 - theta(x) must agree with the barycentric value.
        let theta_val: Rat = datum
            .highest
            .iter()
            .zip(&x_finite)
            .map(|(c, x)| Ratio::from_integer(*c) * x)
            .sum();
        assert_eq!(
            Ratio::from_integer(1) - theta_val,
            value(0),
            "facet point inconsistent for J={j:?}"
        );
        Ok(ParahoricLabel { j, x_finite })
    }

    pub fn from_nodes(datum: &FiniteRootDatum, nodes: &[usize]) -> Result<Self> {
        Self::new(datum, nodes.iter().copied().collect())
    }

    /// Semisimple rank of the reductive quotient.
    pub fn rank(&self) -> usize {
        self.j.len()
    }

    /// beta(x_J), with delta evaluating to 1.
    pub fn eval(&self, beta: &AffineRoot) -> Rat {
        let g: Rat = beta
            .gamma
            .iter()
            .zip(&self.x_finite)
            .map(|(c, x)| Ratio::from_integer(*c) * x)
            .sum();
        g + Ratio::from_integer(beta.level)
    }

    /// Whether U_beta lies in the m-th (strict: m+) filtration step of this
    /// parahoric: beta(x_J) > m, resp. beta(x_J) >= m.
    pub fn filtration_member(&self, beta: &AffineRoot, m: i64, strict: bool) -> bool {
        let v = self.eval(beta);
        let m = Ratio::from_integer(m);
        if strict {
            v > m
        } else {
            v >= m
        }
    }
}
