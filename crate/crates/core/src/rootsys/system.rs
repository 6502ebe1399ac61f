use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::family::{Family, RootSystemSpec};
use super::weight::{CorootVector, HStarElement, Weight};
use crate::coeff::{CouplingVector, RatFunc};
use crate::error::{Error, Result};

type Q = Rational64;

/// Which coupling a root carries (see [`crate::CouplingVector`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    /// Orbit of the first simple root: coupling `k`.
    First,
    /// Orbit of the last simple root when distinct: coupling `k_prime`.
    Last,
    /// Doubled roots `2e_i` of BC_n: coupling `k_extra`.
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub ambient: Vec<Q>,
    /// Coordinates in the fundamental-weight basis, `<alpha, alpha_i^vee>`.
    pub weight: Weight,
    /// The coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    /// Coordinates in the simple-root basis.
    pub simple_coords: Vec<Q>,
    /// `(alpha, alpha)` in the ambient form.
    pub norm: Q,
    pub class: RootClass,
}

impl Root {
    pub fn height(&self) -> Q {
        self.simple_coords.iter().copied().sum()
    }
}

/// Immutable root datum of one irreducible type in its Bourbaki realization.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub spec: RootSystemSpec,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Q>>,
    pub positive_roots: Vec<Root>,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Vec<Q>>,
    /// `(varpi_i, varpi_j)`: the inner product on h* in the weight basis.
    pub weight_gram: Vec<Vec<Q>>,
    /// `(alpha_i^vee, alpha_j^vee)`: the dual inner product on h in the coroot basis.
    pub coroot_gram: Vec<Vec<Q>>,
    pub coxeter_number: u64,
    pub weyl_order: u64,
    /// `w0 varpi_i = sign * varpi_{index}`.
    pub longest_element_action: Vec<(i8, usize)>,
    cartan_inverse: Vec<Vec<Q>>,
    /// Index into `positive_roots` of the indivisible root proportional to
    /// each simple root.
    indivisible_simple: Vec<usize>,
    /// 2 for a simple root that is twice an indivisible root (BC), else 1.
    simple_divisor: Vec<i64>,
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn to_int(q: Q) -> i64 {
    assert!(q.is_integer(), "expected an integer, got {q}");
    q.to_integer()
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let n = spec.rank;
        let simple = spec.simple_roots();
        let two = Q::from_integer(2);

        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| to_int(two * dot(&simple[j], &simple[i]) / dot(&simple[i], &simple[i])))
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let cartan_inverse = invert(&cartan_q);

        // varpi_i = sum_j M_ij alpha_j with M = (A^T)^{-1}
        let at: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| cartan_q[j][i]).collect()).collect();
        let m = invert(&at);
        let dim = spec.ambient_dim();
        let fundamental_weights: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..dim)
                    .map(|d| (0..n).map(|j| m[i][j] * simple[j][d]).sum())
                    .collect()
            })
            .collect();

        let weight_gram: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| dot(&fundamental_weights[i], &fundamental_weights[j])).collect())
            .collect();
        let coroot_gram: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        Q::from_integer(4) * dot(&simple[i], &simple[j])
                            / (dot(&simple[i], &simple[i]) * dot(&simple[j], &simple[j]))
                    })
                    .collect()
            })
            .collect();

        // closure of the simple roots under simple reflections
        let reflect_amb = |v: &[Q], a: &[Q]| -> Vec<Q> {
            let c = two * dot(v, a) / dot(a, a);
            v.iter().zip(a).map(|(x, y)| *x - c * *y).collect()
        };
        let mut seen: HashSet<Vec<Q>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<Q>> = simple.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for a in &simple {
                let w = reflect_amb(&v, a);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        if spec.family == Family::BC {
            let halves: Vec<Vec<Q>> = seen
                .iter()
                .filter(|v| dot(v, v) == Q::from_integer(4))
                .map(|v| v.iter().map(|x| x / two).collect())
                .collect();
            seen.extend(halves);
        }

        let norm_first;
        let norm_last;
        {
            // the indivisible roots along alpha_1 and alpha_n
            let indiv = |a: &Vec<Q>| -> Q {
                let half: Vec<Q> = a.iter().map(|x| x / two).collect();
                if seen.contains(&half) {
                    dot(&half, &half)
                } else {
                    dot(a, a)
                }
            };
            norm_first = indiv(&simple[0]);
            norm_last = indiv(&simple[n - 1]);
        }

        let mut positive: Vec<Root> = seen
            .into_iter()
            .filter_map(|amb| {
                let weight: Vec<i64> = (0..n)
                    .map(|i| to_int(two * dot(&amb, &simple[i]) / dot(&simple[i], &simple[i])))
                    .collect();
                let simple_coords: Vec<Q> = (0..n)
                    .map(|i| (0..n).map(|j| cartan_inverse[i][j] * Q::from_integer(weight[j])).sum())
                    .collect();
                if simple_coords.iter().any(|c| c.is_negative()) {
                    return None;
                }
                let norm = dot(&amb, &amb);
                let coroot: Vec<i64> = (0..n)
                    .map(|i| to_int(two * dot(&fundamental_weights[i], &amb) / norm))
                    .collect();
                let class = if norm == norm_first {
                    RootClass::First
                } else if norm == norm_last {
                    RootClass::Last
                } else {
                    RootClass::Double
                };
                Some(Root {
                    ambient: amb,
                    weight: Weight(weight),
                    coroot,
                    simple_coords,
                    norm,
                    class,
                })
            })
            .collect();
        positive.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| a.simple_coords.cmp(&b.simple_coords))
        });

        let mut indivisible_simple = Vec::with_capacity(n);
        let mut simple_divisor = Vec::with_capacity(n);
        for (i, s) in simple.iter().enumerate() {
            let half: Vec<Q> = s.iter().map(|x| x / two).collect();
            if let Some(idx) = positive.iter().position(|r| r.ambient == half) {
                indivisible_simple.push(idx);
                simple_divisor.push(2);
            } else {
                let idx = positive
                    .iter()
                    .position(|r| &r.ambient == s)
                    .unwrap_or_else(|| panic!("simple root {i} missing"));
                indivisible_simple.push(idx);
                simple_divisor.push(1);
            }
        }

        let degrees = spec.degrees();
        let mut rs = RootSystem {
            spec,
            ambient_dim: dim,
            simple_roots: simple,
            positive_roots: positive,
            cartan,
            fundamental_weights,
            weight_gram,
            coroot_gram,
            coxeter_number: *degrees.iter().max().unwrap(),
            weyl_order: degrees.iter().product(),
            longest_element_action: Vec::new(),
            cartan_inverse,
            indivisible_simple,
            simple_divisor,
        };
        rs.longest_element_action = (0..n)
            .map(|i| {
                let low = rs.to_antidominant(&Weight::fundamental(n, i));
                let j = low.0.iter().position(|&c| c != 0).expect("nonzero weight");
                debug_assert_eq!(low.0.iter().filter(|&&c| c != 0).count(), 1);
                (low.0[j].signum() as i8, j)
            })
            .collect();
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Weight coordinates of the `i`-th simple root (column `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    /// Index into `positive_roots` of the indivisible root along `alpha_i`.
    pub fn indivisible_simple(&self, i: usize) -> usize {
        self.indivisible_simple[i]
    }

    /// Position of `2 alpha` among the positive roots, if it is a root.
    pub fn doubled(&self, root: usize) -> Option<usize> {
        let w = self.positive_roots[root].weight.scaled(2);
        self.positive_roots.iter().position(|r| r.weight == w)
    }

    pub fn root_index(&self, weight: &Weight) -> Option<usize> {
        self.positive_roots.iter().position(|r| &r.weight == weight)
    }

    /// `s_i` on an integral weight.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.0[i];
        if c == 0 {
            return mu.clone();
        }
        Weight(
            mu.0.iter()
                .enumerate()
                .map(|(j, x)| x - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// `s_alpha` for a positive root given by index.
    pub fn reflect_weight_by_root(&self, root: usize, mu: &Weight) -> Weight {
        let r = &self.positive_roots[root];
        let c = mu.pair(&r.coroot);
        if c == 0 {
            return mu.clone();
        }
        Weight(mu.0.iter().zip(&r.weight.0).map(|(x, a)| x - c * a).collect())
    }

    /// `s_i(v) = v - v(alpha_i^vee) alpha_i` on h*.
    pub fn reflect(&self, i: usize, v: &HStarElement) -> Result<HStarElement> {
        self.check_index(i)?;
        if v.rank() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: v.rank(),
            });
        }
        let c = v.0[i].clone();
        Ok(HStarElement(
            v.0.iter()
                .enumerate()
                .map(|(j, x)| x - &(&c * &RatFunc::from_int(self.cartan[j][i])))
                .collect(),
        ))
    }

    /// `s_i(xi) = xi - alpha_i(xi) alpha_i^vee` on h.
    pub fn reflect_coroot(&self, i: usize, xi: &CorootVector) -> Result<CorootVector> {
        self.check_index(i)?;
        let a = self.simple_root_weight(i);
        let c: RatFunc = xi
            .0
            .iter()
            .zip(&a.0)
            .filter(|(_, &w)| w != 0)
            .map(|(x, &w)| x * &RatFunc::from_int(w))
            .sum();
        let mut out = xi.clone();
        out.0[i] = &out.0[i] - &c;
        Ok(out)
    }

    /// Applies a word in simple reflections, rightmost letter first.
    pub fn act_word(&self, word: &[usize], mu: &Weight) -> Weight {
        word.iter()
            .rev()
            .fold(mu.clone(), |acc, &i| self.reflect_weight(i, &acc))
    }

    pub fn to_dominant(&self, mu: &Weight) -> Weight {
        let mut cur = mu.clone();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.reflect_weight(i, &cur);
        }
        cur
    }

    pub fn to_antidominant(&self, mu: &Weight) -> Weight {
        let mut cur = mu.clone();
        while let Some(i) = cur.0.iter().position(|&c| c > 0) {
            cur = self.reflect_weight(i, &cur);
        }
        cur
    }

    /// Dominant representative of a rational vector (weight-basis coordinates).
    pub fn to_dominant_rational(&self, v: &[Q]) -> Vec<Q> {
        let mut cur = v.to_vec();
        while let Some(i) = cur.iter().position(|c| c.is_negative()) {
            let c = cur[i];
            for (j, x) in cur.iter_mut().enumerate() {
                *x -= c * Q::from_integer(self.cartan[j][i]);
            }
        }
        cur
    }

    pub fn weyl_orbit(&self, mu: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let w = self.reflect_weight(i, &v);
                if !seen.contains(&w) {
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn simple_coords(&self, mu: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.cartan_inverse[i][j] * Q::from_integer(mu.0[j])).sum())
            .collect()
    }

    /// Height of a weight measured along indivisible simple roots.
    pub fn height(&self, mu: &Weight) -> Q {
        self.simple_coords(mu)
            .iter()
            .zip(&self.simple_divisor)
            .map(|(c, &d)| c * Q::from_integer(d))
            .sum()
    }

    /// `mu <= nu` in the dominance order: `nu - mu` in `N R_+`.
    pub fn dominance_le(&self, mu: &Weight, nu: &Weight) -> bool {
        let diff = nu - mu;
        self.simple_coords(&diff)
            .iter()
            .zip(&self.simple_divisor)
            .all(|(c, &d)| {
                let x = c * Q::from_integer(d);
                x.is_integer() && !x.is_negative()
            })
    }

    pub fn weyl_invariant_gram(&self) -> &[Vec<Q>] {
        &self.weight_gram
    }

    /// `(mu, nu)` for integral weights.
    pub fn inner_weights(&self, mu: &Weight, nu: &Weight) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            if mu.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += Q::from_integer(mu.0[i] * nu.0[j]) * self.weight_gram[i][j];
            }
        }
        s
    }

    /// `(u, v)` on h*.
    pub fn inner(&self, u: &HStarElement, v: &HStarElement) -> RatFunc {
        let n = self.rank();
        let mut s = RatFunc::zero();
        for i in 0..n {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v.0[j].is_zero() || self.weight_gram[i][j].is_zero() {
                    continue;
                }
                s += &(&(&u.0[i] * &v.0[j]) * &q_to_ratfunc(self.weight_gram[i][j]));
            }
        }
        s
    }

    /// Coupling carried by a positive root.
    pub fn coupling<'a>(&self, kvec: &'a CouplingVector, root: usize) -> &'a RatFunc {
        match self.positive_roots[root].class {
            RootClass::First => &kvec.k,
            RootClass::Last => &kvec.k_prime,
            RootClass::Double => &kvec.k_extra,
        }
    }

    /// Coupling `k_i` of the indivisible root along `alpha_i`.
    pub fn simple_coupling<'a>(&self, kvec: &'a CouplingVector, i: usize) -> &'a RatFunc {
        self.coupling(kvec, self.indivisible_simple[i])
    }

    /// Symbolic couplings: `k` on the first orbit, `kp` on the second one
    /// for B, C, F, G (and on `e_i` for BC_n); for A_n `kp` is the extra
    /// parameter; for BC_1 it is the coupling of `2 alpha`.
    pub fn symbolic_couplings(&self) -> CouplingVector {
        let k = RatFunc::k();
        let kp = RatFunc::kp();
        match self.family() {
            Family::A => CouplingVector::new(k.clone(), k, kp),
            Family::D | Family::E => CouplingVector::uniform(k),
            Family::B | Family::C | Family::F | Family::G => CouplingVector::new(k, kp, RatFunc::zero()),
            Family::BC if self.rank() == 1 => CouplingVector::new(k.clone(), k, kp),
            Family::BC => CouplingVector::new(k, kp, RatFunc::zero()),
        }
    }

    pub fn rho_weight(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// The vector `alpha'` attached to a positive root of A_n, in the
    /// simple-coroot basis: the image of `e_i + e_j` modulo the diagonal when
    /// `alpha = e_i - e_j`.
    pub fn alpha_prime(&self, root: usize) -> Result<Vec<Q>> {
        if self.family() != Family::A {
            return Err(Error::UnsupportedType(format!(
                "alpha' is defined for type A only, not {}",
                self.spec
            )));
        }
        let r = self
            .positive_roots
            .get(root)
            .ok_or(Error::IndexOutOfRange {
                index: root,
                rank: self.positive_roots.len(),
            })?;
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (d, x) in r.ambient.iter().enumerate() {
            if !x.is_zero() {
                v[d] = Q::one();
            }
        }
        Ok(self.fundamental_weights.iter().map(|w| dot(w, &v)).collect())
    }

    /// `(xi, eta)^vee` for coroot-basis vectors with rational entries.
    pub fn coroot_inner(&self, xi: &[Q], eta: &[Q]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            for j in 0..n {
                s += xi[i] * eta[j] * self.coroot_gram[i][j];
            }
        }
        s
    }
}

pub(crate) fn q_to_ratfunc(q: Q) -> RatFunc {
    RatFunc::frac(*q.numer(), *q.denom())
}

/// JSON form of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDoc {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Simple-root coordinates of each positive root.
    pub positive_roots: Vec<Vec<String>>,
    /// Ambient rational coordinates.
    pub fundamental_weights: Vec<Vec<String>>,
}

impl From<&RootSystem> for RootSystemDoc {
    fn from(rs: &RootSystem) -> Self {
        let fmt = |v: &[Q]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>();
        RootSystemDoc {
            family: rs.family(),
            rank: rs.rank(),
            cartan: rs.cartan.clone(),
            positive_roots: rs.positive_roots.iter().map(|r| fmt(&r.simple_coords)).collect(),
            fundamental_weights: rs.fundamental_weights.iter().map(|w| fmt(w)).collect(),
        }
    }
}
