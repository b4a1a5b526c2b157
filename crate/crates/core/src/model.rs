//! Finite extensional semantics for Leśniewski's ontology and mereology.
//!
//! A [`FiniteModel`] is the lattice of nonempty subsets of a finite atom set
//! ordered by inclusion (a complete Boolean lattice with its zero deleted).
//! Names denote sets of individuals ([`NameDen`]); the copula and the
//! name-forming functors are evaluated over any structure implementing
//! [`Mereology`], which only exposes the part order. The closed-form
//! [`oracle_den`] works on atom masks instead and serves as an independent
//! cross-check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Largest supported atom count for powerset models.
pub const MAX_ATOMS: usize = 6;
/// Largest number of individuals any structure may have (names are `u64` masks).
pub const MAX_INDIVIDUALS: usize = 63;

const DEFAULT_ATOM_NAMES: [&str; MAX_ATOMS] = ["x", "y", "z", "w", "v", "t"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("atom count {0} out of range 1..={MAX_ATOMS}")]
    AtomCountOutOfRange(usize),
    #[error("constant `{constant}` mentions undeclared atom `{atom}`")]
    UnknownAtomInConstant { constant: String, atom: String },
    #[error("constant `{0}` lists an empty individual `{{}}`")]
    EmptySetAsIndividual(String),
    #[error("individual index {index} is not in a structure of {size} individuals")]
    ForeignIndividual { index: usize, size: usize },
    #[error("functor `{functor}` takes {expected} argument(s), got {found}")]
    ArityMismatch { functor: &'static str, expected: usize, found: usize },
    #[error("constant `{0}` defined twice")]
    DuplicateConstant(String),
    #[error("atom `{0}` declared twice")]
    DuplicateAtom(String),
    #[error("`empty` is reserved for the empty name and cannot list individuals")]
    EmptyConstantRedefined,
    #[error("structure would have {0} individuals, more than {MAX_INDIVIDUALS}")]
    TooManyIndividuals(usize),
}

/// The denotation of a name: a set of individuals, stored as a bit mask over
/// individual indices. Empty, singular and plural names are all representable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct NameDen(u64);

impl NameDen {
    pub const EMPTY: NameDen = NameDen(0);

    pub const fn from_bits(bits: u64) -> Self {
        NameDen(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < 64);
        NameDen(1u64 << index)
    }

    /// All individuals `0..count`.
    pub fn full(count: usize) -> Self {
        if count >= 64 {
            NameDen(u64::MAX)
        } else {
            NameDen((1u64 << count) - 1)
        }
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singular(self) -> bool {
        self.0.count_ones() == 1
    }

    /// The unique member of a singular name.
    pub fn singular_member(self) -> Option<usize> {
        self.is_singular().then(|| self.0.trailing_zeros() as usize)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn with(self, index: usize) -> Self {
        NameDen(self.0 | (1u64 << index))
    }

    pub fn union(self, other: NameDen) -> Self {
        NameDen(self.0 | other.0)
    }

    pub fn intersection(self, other: NameDen) -> Self {
        NameDen(self.0 & other.0)
    }

    pub fn intersects(self, other: NameDen) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: NameDen) -> bool {
        self.0 & !other.0 == 0
    }
}

impl FromIterator<usize> for NameDen {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(NameDen::EMPTY, NameDen::with)
    }
}

/// Name-forming functors of the ontology and mereology.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Functor {
    Pt,
    El,
    Kl,
    Coll,
    Ov,
    Subcoll,
    Distinct,
    Ext,
    Union,
}

impl Functor {
    pub const ALL: [Functor; 9] = [
        Functor::Pt,
        Functor::El,
        Functor::Kl,
        Functor::Coll,
        Functor::Ov,
        Functor::Subcoll,
        Functor::Distinct,
        Functor::Ext,
        Functor::Union,
    ];

    pub fn arity(self) -> usize {
        match self {
            Functor::Union => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Functor::Pt => "pt",
            Functor::El => "el",
            Functor::Kl => "Kl",
            Functor::Coll => "coll",
            Functor::Ov => "ov",
            Functor::Subcoll => "subcoll",
            Functor::Distinct => "distinct",
            Functor::Ext => "ext",
            Functor::Union => "union",
        }
    }

    pub fn from_name(name: &str) -> Option<Functor> {
        Functor::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite structure of individuals ordered by part-of, with named constants.
///
/// Implementations must keep `below(i)` reflexive (`i` is below itself).
pub trait Mereology {
    fn individual_count(&self) -> usize;

    /// Everything that is part of individual `i`, including `i` itself.
    fn below(&self, i: usize) -> NameDen;

    fn constant(&self, name: &str) -> Option<NameDen>;

    fn constant_names(&self) -> Vec<String>;

    fn individual_label(&self, i: usize) -> String;

    fn leq(&self, a: usize, b: usize) -> bool {
        self.below(b).contains(a)
    }

    /// The universal name (every individual).
    fn universal(&self) -> NameDen {
        NameDen::full(self.individual_count())
    }

    fn check_den(&self, den: NameDen) -> Result<(), ModelError> {
        let size = self.individual_count();
        match den.members().find(|&i| i >= size) {
            Some(index) => Err(ModelError::ForeignIndividual { index, size }),
            None => Ok(()),
        }
    }

    /// Human-readable rendering, `empty` for the empty name.
    fn render(&self, den: NameDen) -> String {
        if den.is_empty() {
            return "empty".to_string();
        }
        den.members().map(|i| self.individual_label(i)).collect::<Vec<_>>().join(" ")
    }
}

/// Source-level description of a model: declared atoms and constant definitions,
/// each constant listing individuals as atom groups.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelSpec {
    pub atoms: Vec<String>,
    pub constants: Vec<(String, Vec<Vec<String>>)>,
}

/// A powerset-minus-empty model over `atoms`.
///
/// Individual `i` is the atom subset with bit mask `i + 1`, so indices are
/// stable and ordered by mask value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    id: String,
    atoms: Vec<String>,
    below: Vec<NameDen>,
    constants: BTreeMap<String, NameDen>,
}

impl FiniteModel {
    /// Builds the model; every constant group must be a nonempty set of
    /// declared atoms. The constant `empty` is always present.
    pub fn new(
        id: impl Into<String>,
        atoms: Vec<String>,
        constants: &[(String, Vec<Vec<String>>)],
    ) -> Result<Self, ModelError> {
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(ModelError::AtomCountOutOfRange(atoms.len()));
        }
        let mut seen = BTreeSet::new();
        for a in &atoms {
            if !seen.insert(a.as_str()) {
                return Err(ModelError::DuplicateAtom(a.clone()));
            }
        }
        let count = (1usize << atoms.len()) - 1;
        // part_leq is subset inclusion of the atom masks.
        let below = (0..count)
            .map(|i| {
                let mi = i + 1;
                (0..count).filter(|&j| (j + 1) & !mi == 0).collect()
            })
            .collect();
        let mut model = FiniteModel { id: id.into(), atoms, below, constants: BTreeMap::new() };
        model.constants.insert("empty".to_string(), NameDen::EMPTY);
        let mut defined = BTreeSet::new();
        for (name, groups) in constants {
            if !defined.insert(name.as_str()) {
                return Err(ModelError::DuplicateConstant(name.clone()));
            }
            if name == "empty" {
                if groups.is_empty() {
                    continue;
                }
                return Err(ModelError::EmptyConstantRedefined);
            }
            let mut den = NameDen::EMPTY;
            for group in groups {
                den = den.with(model.resolve_group(name, group)?);
            }
            model.constants.insert(name.clone(), den);
        }
        Ok(model)
    }

    pub fn from_spec(id: impl Into<String>, spec: &ModelSpec) -> Result<Self, ModelError> {
        FiniteModel::new(id, spec.atoms.clone(), &spec.constants)
    }

    /// Adds (or replaces) a constant with an explicit denotation.
    pub fn with_constant(mut self, name: impl Into<String>, den: NameDen) -> Self {
        self.constants.insert(name.into(), den);
        self
    }

    fn resolve_group(&self, constant: &str, group: &[String]) -> Result<usize, ModelError> {
        if group.is_empty() {
            return Err(ModelError::EmptySetAsIndividual(constant.to_string()));
        }
        let mut mask = 0usize;
        for atom in group {
            let pos = self.atoms.iter().position(|a| a == atom).ok_or_else(|| ModelError::UnknownAtomInConstant {
                constant: constant.to_string(),
                atom: atom.clone(),
            })?;
            mask |= 1 << pos;
        }
        Ok(mask - 1)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Atom bit mask of individual `i`.
    pub fn atom_mask(&self, i: usize) -> u64 {
        (i + 1) as u64
    }

    /// Index of the individual whose atom mask is `mask` (nonzero).
    pub fn individual_of_mask(&self, mask: u64) -> usize {
        debug_assert!(mask != 0);
        (mask - 1) as usize
    }

    /// Individuals that are atoms (minimal in the part order).
    pub fn atom_individuals(&self) -> NameDen {
        (0..self.individual_count()).filter(|&i| self.below(i).len() == 1).collect()
    }

    pub fn constants(&self) -> &BTreeMap<String, NameDen> {
        &self.constants
    }
}

impl Mereology for FiniteModel {
    fn individual_count(&self) -> usize {
        self.below.len()
    }

    fn below(&self, i: usize) -> NameDen {
        self.below[i]
    }

    fn constant(&self, name: &str) -> Option<NameDen> {
        self.constants.get(name).copied()
    }

    fn constant_names(&self) -> Vec<String> {
        self.constants.keys().cloned().collect()
    }

    fn individual_label(&self, i: usize) -> String {
        let mask = self.atom_mask(i);
        let inner: Vec<&str> =
            self.atoms.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, a)| a.as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Powerset model over `atom_count` default-named atoms (`x y z w v t`).
/// Constant groups use those atom names.
pub fn make_powerset_model(
    atom_count: usize,
    constant_defs: &BTreeMap<String, Vec<Vec<String>>>,
) -> Result<FiniteModel, ModelError> {
    if atom_count == 0 || atom_count > MAX_ATOMS {
        return Err(ModelError::AtomCountOutOfRange(atom_count));
    }
    let atoms = DEFAULT_ATOM_NAMES[..atom_count].iter().map(|s| s.to_string()).collect();
    let constants: Vec<_> = constant_defs.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    FiniteModel::new(format!("powerset-{atom_count}"), atoms, &constants)
}

/// `A ε b`: `a` denotes exactly one individual and `b` names it.
pub fn eval_epsilon<M: Mereology + ?Sized>(model: &M, a: NameDen, b: NameDen) -> Result<bool, ModelError> {
    model.check_den(a)?;
    model.check_den(b)?;
    Ok(epsilon(a, b))
}

#[inline]
pub(crate) fn epsilon(a: NameDen, b: NameDen) -> bool {
    a.is_singular() && a.is_subset_of(b)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EqualityKind {
    /// `A ε B ∧ B ε A`; irreflexive on empty and plural names.
    Singular,
    /// Coextensive names.
    Weak,
}

pub fn eval_equality<M: Mereology + ?Sized>(
    model: &M,
    kind: EqualityKind,
    lhs: NameDen,
    rhs: NameDen,
) -> Result<bool, ModelError> {
    model.check_den(lhs)?;
    model.check_den(rhs)?;
    Ok(equality(kind, lhs, rhs))
}

#[inline]
pub(crate) fn equality(kind: EqualityKind, lhs: NameDen, rhs: NameDen) -> bool {
    match kind {
        EqualityKind::Singular => epsilon(lhs, rhs) && epsilon(rhs, lhs),
        EqualityKind::Weak => lhs == rhs,
    }
}

fn check_arity(f: Functor, args: &[NameDen]) -> Result<(), ModelError> {
    if args.len() != f.arity() {
        return Err(ModelError::ArityMismatch { functor: f.name(), expected: f.arity(), found: args.len() });
    }
    Ok(())
}

/// Definitional semantics of a functor, read off the defining clauses and
/// evaluated by quantifying over the individuals of `model`.
pub fn functor_den<M: Mereology + ?Sized>(model: &M, f: Functor, args: &[NameDen]) -> Result<NameDen, ModelError> {
    check_arity(f, args)?;
    for &a in args {
        model.check_den(a)?;
    }
    Ok(functor_den_unchecked(model, f, args))
}

pub(crate) fn functor_den_unchecked<M: Mereology + ?Sized>(model: &M, f: Functor, args: &[NameDen]) -> NameDen {
    let n = model.individual_count();
    let b = args[0];
    let select = |pred: &dyn Fn(usize) -> bool| (0..n).filter(|&x| pred(x)).collect::<NameDen>();
    match f {
        Functor::Pt => select(&|x| b.members().any(|y| strictly_below(model, x, y))),
        Functor::El => el_den(model, b),
        Functor::Kl => select(&|s| is_class_of(model, s, b)),
        Functor::Coll => select(&|p| is_collection_of(model, p, b)),
        Functor::Ov => {
            let el_q = el_den(model, b);
            select(&|p| model.below(p).intersects(el_q))
        }
        Functor::Subcoll => {
            let el_a = el_den(model, b);
            select(&|s| is_sum_of_some_subset(model, s, el_a))
        }
        Functor::Distinct => NameDen::from_bits(model.universal().bits() & !b.bits()),
        Functor::Ext => select(&|x| b.members().all(|y| !model.below(x).intersects(model.below(y)))),
        Functor::Union => b.union(args[1]),
    }
}

fn strictly_below<M: Mereology + ?Sized>(model: &M, x: usize, y: usize) -> bool {
    model.leq(x, y) && !model.leq(y, x)
}

/// `x ε el b` for some member of `b`: identity or proper part.
fn el_den<M: Mereology + ?Sized>(model: &M, b: NameDen) -> NameDen {
    (0..model.individual_count()).filter(|&x| b.members().any(|y| x == y || strictly_below(model, x, y))).collect()
}

/// The four class clauses: `s ε s`, something is an `a`, every `a` is an
/// element of `s`, and every element of `s` shares an element with some `a`.
pub(crate) fn is_class_of<M: Mereology + ?Sized>(model: &M, s: usize, a: NameDen) -> bool {
    if a.is_empty() {
        return false;
    }
    if !a.members().all(|b| model.leq(b, s)) {
        return false;
    }
    model.below(s).members().all(|part| a.members().any(|c| model.below(c).intersects(model.below(part))))
}

/// `p ε coll a`: every element of `p` shares an element with some `a` that is
/// itself an element of `p`.
fn is_collection_of<M: Mereology + ?Sized>(model: &M, p: usize, a: NameDen) -> bool {
    model.below(p).members().all(|q| a.members().any(|c| model.leq(c, p) && model.below(c).intersects(model.below(q))))
}

/// `s` is the class of some nonempty subset of `elements`. Only subsets of
/// the elements below `s` can qualify, and the full such subset is tried first.
fn is_sum_of_some_subset<M: Mereology + ?Sized>(model: &M, s: usize, elements: NameDen) -> bool {
    let pool = elements.intersection(model.below(s)).bits();
    let mut sub = pool;
    while sub != 0 {
        if is_class_of(model, s, NameDen::from_bits(sub)) {
            return true;
        }
        sub = (sub - 1) & pool;
    }
    false
}

/// Closed-form lattice semantics over atom masks, independent of
/// [`functor_den`]'s clause-by-clause evaluation.
pub fn oracle_den(model: &FiniteModel, f: Functor, args: &[NameDen]) -> Result<NameDen, ModelError> {
    check_arity(f, args)?;
    for &a in args {
        model.check_den(a)?;
    }
    let n = model.individual_count();
    let masks = |d: NameDen| d.members().map(|i| model.atom_mask(i)).collect::<Vec<_>>();
    let b = args[0];
    let bm = masks(b);
    let select = |pred: &dyn Fn(u64) -> bool| (0..n).filter(|&i| pred(model.atom_mask(i))).collect::<NameDen>();
    let den = match f {
        Functor::Pt => select(&|x| bm.iter().any(|&y| x & !y == 0 && x != y)),
        Functor::El => select(&|x| bm.iter().any(|&y| x & !y == 0)),
        Functor::Kl => {
            if bm.is_empty() {
                NameDen::EMPTY
            } else {
                let lub = bm.iter().fold(0, |acc, m| acc | m);
                NameDen::singleton(model.individual_of_mask(lub))
            }
        }
        Functor::Coll => select(&|p| join_of_those_below(&bm, p) == p),
        Functor::Ov => select(&|p| bm.iter().any(|&q| p & q != 0)),
        Functor::Subcoll => {
            let el = oracle_den(model, Functor::El, &[b])?;
            let em = masks(el);
            select(&|p| join_of_those_below(&em, p) == p)
        }
        Functor::Distinct => select(&|x| !bm.contains(&x)),
        Functor::Ext => select(&|x| bm.iter().all(|&y| x & y == 0)),
        Functor::Union => b.union(args[1]),
    };
    Ok(den)
}

/// Join of the members of `set` lying below `p`; 0 if there are none.
fn join_of_those_below(set: &[u64], p: u64) -> u64 {
    set.iter().filter(|&&m| m & !p == 0).fold(0, |acc, m| acc | m)
}
