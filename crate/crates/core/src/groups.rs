//! Finite real reflection groups `G ⊂ O(V, B)` of crystallographic types A, B
//! and D, plus closures of user-supplied rational generators.
//!
//! Elements are stored as an indexed list. Index 0 is the identity, indices
//! `1..=R` are the reflections sorted by root coordinates, and the remaining
//! elements follow sorted by matrix entries. Monomials refer to group elements
//! by this index.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::geometry::{Covector, QuadraticSpace, RatMatrix, Vector, MAX_DIM};
use crate::scalars::{int, BaseNumber, Rational, MAX_CLASSES};

pub const DEFAULT_ORDER_CAP: usize = 10_000;
const TABLE_LIMIT: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unrecognized group spec `{0}` (expected e.g. A1@2, B2@2, D3@3)")]
    BadSpec(String),
    #[error(
        "type {0} groups have irrational root coordinates and are not supported; use A, B or D"
    )]
    NonCrystallographic(String),
    #[error("type {ty}{rank} needs ambient dimension at least {needed}, got {dim}")]
    DimensionTooSmall {
        ty: char,
        rank: usize,
        needed: usize,
        dim: usize,
    },
    #[error("ambient dimension {0} exceeds the supported maximum {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("group order exceeds the cap of {0} elements")]
    TooLarge(usize),
    #[error("generator {index} is not a {dim}x{dim} matrix")]
    BadGenerator { index: usize, dim: usize },
    #[error("generator {0} does not preserve the bilinear form")]
    NotOrthogonal(usize),
    #[error("generator {0} is singular")]
    Singular(usize),
    #[error("{got} deformation labels given for {expected} reflection classes")]
    LabelCount { expected: usize, got: usize },
    #[error("at most {MAX_CLASSES} independent deformation parameters are supported")]
    TooManyParameters,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    A,
    B,
    D,
}

/// A built-in group request such as `A1@2`: type, rank and ambient dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub ty: RootType,
    pub rank: usize,
    pub dim: usize,
}

impl GroupSpec {
    pub fn new(ty: RootType, rank: usize, dim: usize) -> Self {
        Self { ty, rank, dim }
    }

    fn natural_dim(&self) -> usize {
        match self.ty {
            RootType::A => self.rank + 1,
            RootType::B | RootType::D => self.rank,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.ty {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::D => 'D',
        };
        write!(f, "{t}{}@{}", self.rank, self.dim)
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadSpec(s.to_string());
        let (head, dim) = s.split_once('@').ok_or_else(bad)?;
        let dim: usize = dim.trim().parse().map_err(|_| bad())?;
        let mut chars = head.trim().chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match letter {
            'A' => RootType::A,
            'B' | 'C' => RootType::B,
            'D' => RootType::D,
            'E' | 'F' | 'G' | 'H' | 'I' => {
                return Err(GroupError::NonCrystallographic(head.trim().to_string()))
            }
            _ => return Err(bad()),
        };
        Ok(Self { ty, rank, dim })
    }
}

/// Root data of one reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    /// Group-element index.
    pub element: usize,
    /// `α_s ∈ V*`, a −1 eigenvector, in `x` coordinates.
    pub root: Vec<Rational>,
    /// `B(α_s, α_s)`.
    pub root_norm: Rational,
    /// `α_s∨ = 2β(α_s)/B(α_s, α_s) ∈ V`, in `y` coordinates.
    pub coroot: Vec<Rational>,
    /// Conjugacy class of the reflection.
    pub class: usize,
    /// Index of the deformation parameter `κ` attached to the class.
    pub param: usize,
}

impl Reflection {
    pub fn root_covector(&self) -> Covector {
        Covector::from_rationals(&self.root)
    }

    pub fn coroot_vector(&self) -> Vector {
        Vector::from_rationals(&self.coroot)
    }

    /// `⟨α_s∨, u⟩` for a rational coordinate covector.
    pub fn coroot_pairing(&self, u: &[Rational]) -> Rational {
        self.coroot.iter().zip(u).map(|(a, b)| a * b).sum()
    }

    /// `⟨α_s∨, u⟩` for a general covector.
    pub fn coroot_pairing_base(&self, u: &Covector) -> BaseNumber {
        self.coroot_vector().coords().iter().zip(u.coords()).fold(
            BaseNumber::zero(),
            |mut acc, (a, b)| {
                acc += &(a * b);
                acc
            },
        )
    }
}

#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    name: String,
    space: QuadraticSpace,
    elements: Vec<RatMatrix>,
    dual: Vec<RatMatrix>,
    index: FxHashMap<Vec<Rational>, usize>,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    reflections: Vec<Reflection>,
    reflection_of: Vec<Option<usize>>,
    n_classes: usize,
    n_params: usize,
    param_labels: Vec<String>,
}

impl ReflectionGroup {
    /// Build a type A/B/D group of the given rank acting on the first
    /// coordinates of an orthonormal space of dimension `spec.dim`; the extra
    /// coordinates are fixed pointwise.
    pub fn build(spec: GroupSpec) -> Result<Self, GroupError> {
        if spec.rank == 0 {
            return Err(GroupError::ZeroRank);
        }
        if spec.dim > MAX_DIM {
            return Err(GroupError::DimensionTooLarge(spec.dim));
        }
        let needed = spec
            .natural_dim()
            .max(if spec.ty == RootType::D { 2 } else { 1 });
        if spec.dim < needed {
            let ty = spec.to_string().chars().next().unwrap();
            return Err(GroupError::DimensionTooSmall {
                ty,
                rank: spec.rank,
                needed,
                dim: spec.dim,
            });
        }
        let d = spec.dim;
        let n = spec.natural_dim();
        let mut gens = Vec::new();
        let swap = |i: usize, j: usize, si: i64, sj: i64| {
            let mut m = RatMatrix::identity(d);
            m.set(i, i, Rational::zero());
            m.set(j, j, Rational::zero());
            m.set(i, j, int(si));
            m.set(j, i, int(sj));
            m
        };
        for i in 0..n.saturating_sub(1) {
            gens.push(swap(i, i + 1, 1, 1));
        }
        match spec.ty {
            RootType::A => {}
            RootType::B => {
                let mut m = RatMatrix::identity(d);
                m.set(n - 1, n - 1, int(-1));
                gens.push(m);
            }
            RootType::D => gens.push(swap(n - 2, n - 1, -1, -1)),
        }
        let space = QuadraticSpace::euclidean(d).map_err(|_| GroupError::DimensionTooLarge(d))?;
        Self::from_generators(spec.to_string(), space, &gens, None, DEFAULT_ORDER_CAP)
    }

    /// Closure of rational generator matrices (acting on `x` coordinates).
    ///
    /// `labels`, when given, names the deformation parameter of each
    /// conjugacy class of reflections (in class order); classes sharing a
    /// label share a parameter.
    pub fn from_generators(
        name: String,
        space: QuadraticSpace,
        gens: &[RatMatrix],
        labels: Option<&[String]>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let d = space.dim();
        for (k, g) in gens.iter().enumerate() {
            if g.size() != d {
                return Err(GroupError::BadGenerator { index: k, dim: d });
            }
            if g.inverse().is_none() {
                return Err(GroupError::Singular(k));
            }
            // gᵀ G g = G
            if g.transpose().mul(space.gram()).mul(g) != *space.gram() {
                return Err(GroupError::NotOrthogonal(k));
            }
        }
        let id = RatMatrix::identity(d);
        let mut found: FxHashMap<Vec<Rational>, usize> = FxHashMap::default();
        let mut mats = vec![id.clone()];
        found.insert(id.entries().to_vec(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in gens {
                let m = mats[k].mul(g);
                if !found.contains_key(m.entries()) {
                    if mats.len() >= cap {
                        return Err(GroupError::TooLarge(cap));
                    }
                    found.insert(m.entries().to_vec(), mats.len());
                    queue.push_back(mats.len());
                    mats.push(m);
                }
            }
        }

        // Identify reflections and their roots.
        let mut refl: Vec<(Vec<Rational>, RatMatrix)> = Vec::new();
        let mut others: Vec<RatMatrix> = Vec::new();
        for m in mats.into_iter().skip(1) {
            let sq = m.mul(&m);
            let mut diff = m.clone();
            for r in 0..d {
                diff.set(r, r, diff.get(r, r) - Rational::one());
            }
            if sq.is_identity() && diff.rank() == 1 {
                refl.push((normalized_root(&diff, &space), m));
            } else {
                others.push(m);
            }
        }
        refl.sort_by(|a, b| a.0.cmp(&b.0));
        others.sort_by(|a, b| a.entries().cmp(b.entries()));

        let mut elements = vec![id];
        let mut roots = Vec::with_capacity(refl.len());
        for (root, m) in refl {
            roots.push(root);
            elements.push(m);
        }
        elements.extend(others);
        let index: FxHashMap<Vec<Rational>, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, m)| (m.entries().to_vec(), k))
            .collect();
        let dual: Vec<RatMatrix> = elements
            .iter()
            .map(|m| m.inverse().expect("group element invertible").transpose())
            .collect();
        let order = elements.len();
        let lookup = |m: &RatMatrix| *index.get(m.entries()).expect("closed under products");
        let inverse: Vec<u32> = elements
            .iter()
            .map(|m| lookup(&m.inverse().unwrap()) as u32)
            .collect();
        let table = (order <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = lookup(&elements[a].mul(&elements[b])) as u32;
                }
            }
            t
        });

        // Conjugacy classes of reflections.
        let n_refl = roots.len();
        let mut class = vec![usize::MAX; n_refl];
        let mut n_classes = 0;
        for s in 0..n_refl {
            if class[s] != usize::MAX {
                continue;
            }
            let sm = &elements[s + 1];
            for (g, gm) in elements.iter().enumerate() {
                let conj = gm.mul(sm).mul(&elements[inverse[g] as usize]);
                let t = lookup(&conj);
                class[t - 1] = n_classes;
            }
            n_classes += 1;
        }

        let (params, param_labels) = match labels {
            None => (
                (0..n_classes).collect::<Vec<_>>(),
                (1..=n_classes).map(|c| format!("k{c}")).collect(),
            ),
            Some(ls) => {
                if ls.len() != n_classes {
                    return Err(GroupError::LabelCount {
                        expected: n_classes,
                        got: ls.len(),
                    });
                }
                let mut uniq: Vec<String> = Vec::new();
                let params = ls
                    .iter()
                    .map(|l| {
                        uniq.iter().position(|u| u == l).unwrap_or_else(|| {
                            uniq.push(l.clone());
                            uniq.len() - 1
                        })
                    })
                    .collect();
                (params, uniq)
            }
        };
        if param_labels.len() > MAX_CLASSES {
            return Err(GroupError::TooManyParameters);
        }

        let reflections = roots
            .into_iter()
            .enumerate()
            .map(|(k, root)| {
                let rc = Covector::from_rationals(&root);
                let norm = space.form(&rc, &rc).as_rational().expect("rational root");
                let coroot = space
                    .gram()
                    .apply(&root)
                    .into_iter()
                    .map(|c| c * int(2) / norm)
                    .collect();
                Reflection {
                    element: k + 1,
                    root,
                    root_norm: norm,
                    coroot,
                    class: class[k],
                    param: params[class[k]],
                }
            })
            .collect::<Vec<_>>();
        let mut reflection_of = vec![None; order];
        for (k, r) in reflections.iter().enumerate() {
            reflection_of[r.element] = Some(k);
        }
        Ok(Self {
            name,
            space,
            elements,
            dual,
            index,
            table,
            inverse,
            reflections,
            reflection_of,
            n_classes,
            n_params: param_labels.len(),
            param_labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// The reflection data of element `g`, if it is a reflection.
    pub fn reflection(&self, g: usize) -> Option<&Reflection> {
        self.reflection_of[g].map(|k| &self.reflections[k])
    }

    pub fn class_count(&self) -> usize {
        self.n_classes
    }

    pub fn param_count(&self) -> usize {
        self.n_params
    }

    pub fn param_labels(&self) -> &[String] {
        &self.param_labels
    }

    /// Matrix of `g` on `x` coordinates of `V*`.
    pub fn matrix(&self, g: usize) -> &RatMatrix {
        &self.elements[g]
    }

    /// Matrix of `g` on `y` coordinates of `V` (the contragredient action).
    pub fn dual_matrix(&self, g: usize) -> &RatMatrix {
        &self.dual[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[self.elements[a].mul(&self.elements[b]).entries()],
        }
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    pub fn index_of(&self, m: &RatMatrix) -> Option<usize> {
        self.index.get(m.entries()).copied()
    }

    /// Rendering name: `s<k>` for reflections, `g<k>` otherwise, empty for the
    /// identity.
    pub fn element_name(&self, g: usize) -> String {
        if g == 0 {
            String::new()
        } else if self.reflection_of[g].is_some() {
            format!("s{g}")
        } else {
            format!("g{g}")
        }
    }

    pub fn act_covector(&self, g: usize, u: &Covector) -> Covector {
        let m = &self.elements[g];
        let d = self.dim();
        Covector::new(
            (0..d)
                .map(|r| {
                    let mut acc = BaseNumber::zero();
                    for c in 0..d {
                        let e = m.get(r, c);
                        if !e.is_zero() {
                            acc += &u.coord(c).scale(&e);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn act_vector(&self, g: usize, v: &Vector) -> Vector {
        let m = &self.dual[g];
        let d = self.dim();
        Vector::new(
            (0..d)
                .map(|r| {
                    let mut acc = BaseNumber::zero();
                    for c in 0..d {
                        let e = m.get(r, c);
                        if !e.is_zero() {
                            acc += &v.coord(c).scale(&e);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }
}

/// Primitive integral generator of the image of `s − 1`, first nonzero
/// coordinate positive, rescaled so that `B(α, α) ∈ {1, 2}` whenever a
/// rational rescaling achieves it.
fn normalized_root(diff: &RatMatrix, space: &QuadraticSpace) -> Vec<Rational> {
    let d = diff.size();
    let col = (0..d)
        .find(|&c| (0..d).any(|r| !diff.get(r, c).is_zero()))
        .expect("rank one");
    let mut v: Vec<Rational> = (0..d).map(|r| diff.get(r, col)).collect();
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    v.iter_mut().for_each(|x| *x *= int(lcm));
    let g = v.iter().fold(0i64, |acc, x| acc.gcd(x.numer()));
    v.iter_mut().for_each(|x| *x /= int(g));
    if v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    let cv = Covector::from_rationals(&v);
    let norm = space.form(&cv, &cv).as_rational().expect("rational");
    for target in [1i64, 2] {
        if let Some(c) = rational_sqrt(int(target) / norm) {
            if !c.is_one() {
                v.iter_mut().for_each(|x| *x *= c);
            }
            break;
        }
    }
    v
}

fn rational_sqrt(q: Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let isqrt = |n: i64| {
        let r = (n as f64).sqrt().round() as i64;
        (r.checked_mul(r) == Some(n)).then_some(r)
    };
    Some(Rational::new(isqrt(*q.numer())?, isqrt(*q.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> ReflectionGroup {
        ReflectionGroup::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_in_dimension_two() {
        let g = group("A1@2");
        assert_eq!(g.order(), 2);
        assert_eq!(g.reflections().len(), 1);
        assert_eq!(g.class_count(), 1);
        let s = &g.reflections()[0];
        assert_eq!(s.root, vec![int(1), int(-1)]);
        assert_eq!(s.coroot, vec![int(1), int(-1)]);
        assert_eq!(s.root_norm, int(2));
    }

    #[test]
    fn orders_and_classes() {
        let a2 = group("A2@3");
        assert_eq!(
            (a2.order(), a2.reflections().len(), a2.class_count()),
            (6, 3, 1)
        );
        let b2 = group("B2@2");
        assert_eq!(
            (b2.order(), b2.reflections().len(), b2.class_count()),
            (8, 4, 2)
        );
        let roots: Vec<_> = b2
            .reflections()
            .iter()
            .map(|r| (r.root.clone(), r.class))
            .collect();
        // long roots x1 ± x2 share a class, short roots x1, x2 share the other
        let class_of = |v: Vec<i64>| {
            roots
                .iter()
                .find(|(r, _)| *r == v.iter().map(|&k| int(k)).collect::<Vec<_>>())
                .unwrap()
                .1
        };
        assert_eq!(class_of(vec![1, -1]), class_of(vec![1, 1]));
        assert_eq!(class_of(vec![1, 0]), class_of(vec![0, 1]));
        assert_ne!(class_of(vec![1, 0]), class_of(vec![1, 1]));
        let a3 = group("A3@4");
        assert_eq!(a3.order(), 24);
        let b3 = group("B3@3");
        assert_eq!(b3.order(), 48);
        let d3 = group("D3@3");
        assert_eq!((d3.order(), d3.class_count()), (24, 1));
        let d4 = group("D4@4");
        assert_eq!(d4.order(), 192);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            "I5@2".parse::<GroupSpec>(),
            Err(GroupError::NonCrystallographic(_))
        ));
        assert!(matches!(
            "H3@3".parse::<GroupSpec>(),
            Err(GroupError::NonCrystallographic(_))
        ));
        assert!(matches!(
            "A1".parse::<GroupSpec>(),
            Err(GroupError::BadSpec(_))
        ));
        assert!(matches!(
            ReflectionGroup::build("A2@2".parse().unwrap()),
            Err(GroupError::DimensionTooSmall { .. })
        ));
        assert!(ReflectionGroup::from_generators(
            "big".into(),
            QuadraticSpace::euclidean(4).unwrap(),
            &[RatMatrix::identity(4)],
            None,
            0
        )
        .is_ok());
        assert!(matches!(
            ReflectionGroup::build("A3@4".parse().unwrap()).map(|g| g.order()),
            Ok(24)
        ));
        let space = QuadraticSpace::euclidean(4).unwrap();
        let gens = ReflectionGroup::build("B4@4".parse().unwrap()).unwrap();
        let gm: Vec<RatMatrix> = (1..gens.order())
            .take(6)
            .map(|k| gens.matrix(k).clone())
            .collect();
        assert!(matches!(
            ReflectionGroup::from_generators("cap".into(), space, &gm, None, 10),
            Err(GroupError::TooLarge(10))
        ));
    }

    #[test]
    fn reflection_formula_and_invariance() {
        for spec in ["A2@3", "B2@2", "D3@3", "A1@5"] {
            let g = group(spec);
            let sp = g.space().clone();
            let d = g.dim();
            for s in g.reflections() {
                // s(u) = u − α⟨α∨, u⟩ on basis covectors
                for j in 0..d {
                    let u = sp.x(j);
                    let lhs = g.act_covector(s.element, &u);
                    let c = s.coroot_pairing_base(&u);
                    let rhs = &u - &s.root_covector().scale(&c);
                    assert_eq!(lhs, rhs);
                }
                assert_eq!(
                    g.act_covector(s.element, &s.root_covector()),
                    -&s.root_covector()
                );
                assert_eq!(g.mul(s.element, s.element), 0);
            }
            for a in 0..g.order() {
                assert_eq!(g.mul(a, g.inverse(a)), 0);
                for s in g.reflections() {
                    let conj = g.mul(g.mul(a, s.element), g.inverse(a));
                    let t = g.reflection(conj).expect("conjugate of reflection");
                    assert_eq!(t.class, s.class);
                }
                for j in 0..d {
                    for k in 0..d {
                        let (u, v) = (sp.x(j), sp.x(k));
                        let gu = g.act_covector(a, &u);
                        let gv = g.act_covector(a, &v);
                        assert_eq!(sp.form(&gu, &gv), sp.form(&u, &v));
                        // contragredient: ⟨g·y, g·x⟩ = ⟨y, x⟩
                        let gy = g.act_vector(a, &sp.y(k));
                        assert_eq!(gu.pair(&gy), u.pair(&sp.y(k)));
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_action() {
        let g = group("A1@2");
        let sp = g.space();
        assert_eq!(g.act_covector(1, &sp.x(0)), sp.x(1));
        assert_eq!(g.element_name(1), "s1");
        assert_eq!(g.element_name(0), "");
    }

    #[test]
    fn labels_merge_parameters() {
        let b2 = group("B2@2");
        let gens: Vec<RatMatrix> = (1..b2.order()).map(|k| b2.matrix(k).clone()).collect();
        let labels = vec!["c".to_string(), "c".to_string()];
        let merged = ReflectionGroup::from_generators(
            "B2-equal".into(),
            QuadraticSpace::euclidean(2).unwrap(),
            &gens,
            Some(&labels),
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(merged.class_count(), 2);
        assert_eq!(merged.param_count(), 1);
    }
}
