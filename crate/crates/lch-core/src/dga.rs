//! Free noncommutative differential graded algebras over F₂.
//!
//! A presentation consists of finitely many graded generators together
//! with a differential assignment per generator. Words are finite
//! sequences of generator ids (the empty word is the unit), polynomials
//! are sets of words with implicit coefficient 1, and addition is
//! symmetric difference. The differential extends to the whole algebra
//! by linearity and the Leibniz rule and lowers degree by exactly one;
//! homogeneity is enforced at build time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A graded generator. Ids are plain tokens; a bracket suffix such as
/// `b[m1]` is an ordinary part of the id and carries no meaning here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: i64) -> Self {
        Generator { id: id.into(), degree }
    }
}

/// A monomial: a finite sequence of generator ids. The empty sequence
/// is the unit 1 of the algebra and has degree 0.
///
/// Words are ordered length-lexicographically (shorter first, ties by
/// the id sequence) so that polynomial term order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    factors: Vec<String>,
}

impl Word {
    pub fn unit() -> Self {
        Word { factors: Vec::new() }
    }

    pub fn single(id: impl Into<String>) -> Self {
        Word { factors: vec![id.into()] }
    }

    pub fn from_factors<I, S>(factors: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Word { factors: factors.into_iter().map(Into::into).collect() }
    }

    pub fn factors(&self) -> &[String] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation of monomials.
    pub fn concat(&self, other: &Word) -> Word {
        let mut factors = Vec::with_capacity(self.len() + other.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        Word { factors }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.factors
            .len()
            .cmp(&other.factors.len())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.factors.join("."))
        }
    }
}

/// An F₂-linear combination of words. Stored as the set of words with
/// coefficient 1; addition is symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeSet<Word>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(w);
        Polynomial { terms }
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut p = Polynomial::zero();
        for w in words {
            p.toggle(w);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Word> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.terms.contains(w)
    }

    /// Add a single word mod 2.
    pub fn toggle(&mut self, w: Word) {
        if !self.terms.remove(&w) {
            self.terms.insert(w);
        }
    }

    /// Sum mod 2 (symmetric difference of term sets).
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut result = self.clone();
        for w in &other.terms {
            result.toggle(w.clone());
        }
        result
    }

    /// Product, extended bilinearly from concatenation of words.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut result = Polynomial::zero();
        for u in &self.terms {
            for v in &other.terms {
                result.toggle(u.concat(v));
            }
        }
        result
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self.terms.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Errors from building a presentation or applying its differential.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgaError {
    #[error("duplicate generator id `{0}`")]
    DuplicateId(String),
    #[error("differential of `{gen}` mentions undeclared generator `{unknown}`")]
    UnknownGeneratorInDifferential { gen: String, unknown: String },
    #[error(
        "differential of `{gen}` is inhomogeneous: term `{term}` has degree {actual}, expected {expected}"
    )]
    InhomogeneousDifferential {
        gen: String,
        term: String,
        expected: i64,
        actual: i64,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// Errors from the amalgamated pushout.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PushoutError {
    #[error("shared id `{0}` is not a generator of both presentations")]
    SharedNotPresent(String),
    #[error("shared generator `{0}` has different degrees in the two presentations")]
    SharedDegreeMismatch(String),
    #[error("shared generator `{0}` has different differentials in the two presentations")]
    SharedDifferentialMismatch(String),
    #[error("differential of shared generator `{gen}` mentions non-shared generator `{escapes}`")]
    SharedNotClosed { gen: String, escapes: String },
    #[error("non-shared id `{0}` appears in both presentations")]
    IdCollision(String),
}

/// Outcome of the exactness check: either a pass or the list of
/// generators whose differential fails to be a cycle, with residuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredReport {
    pub failures: Vec<(String, Polynomial)>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A finitely presented free noncommutative DGA over F₂.
///
/// Immutable after construction. The differential map stores only
/// generators with nonzero differential; undeclared entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgaPresentation {
    generators: Vec<Generator>,
    index: BTreeMap<String, usize>,
    differential: BTreeMap<String, Polynomial>,
}

impl DgaPresentation {
    /// Validate and build a presentation. Every id appearing in a
    /// differential must be declared and every term of `∂g` must have
    /// degree `deg(g) − 1`.
    pub fn build(
        gens: Vec<(String, i64)>,
        diffs: BTreeMap<String, Polynomial>,
    ) -> Result<Self, DgaError> {
        let mut generators = Vec::with_capacity(gens.len());
        let mut index = BTreeMap::new();
        for (id, degree) in gens {
            if index.contains_key(&id) {
                return Err(DgaError::DuplicateId(id));
            }
            index.insert(id.clone(), generators.len());
            generators.push(Generator { id, degree });
        }
        let p = DgaPresentation { generators, index, differential: BTreeMap::new() };

        let mut differential = BTreeMap::new();
        for (gen, poly) in diffs {
            let gen_degree = match p.degree_of(&gen) {
                Some(d) => d,
                None => {
                    return Err(DgaError::UnknownGeneratorInDifferential {
                        gen: gen.clone(),
                        unknown: gen,
                    })
                }
            };
            for term in poly.terms() {
                for factor in term.factors() {
                    if !p.index.contains_key(factor) {
                        return Err(DgaError::UnknownGeneratorInDifferential {
                            gen,
                            unknown: factor.clone(),
                        });
                    }
                }
                let actual = p.word_degree(term).expect("factors validated");
                if actual != gen_degree - 1 {
                    return Err(DgaError::InhomogeneousDifferential {
                        gen,
                        term: term.to_string(),
                        expected: gen_degree - 1,
                        actual,
                    });
                }
            }
            if !poly.is_zero() {
                differential.insert(gen, poly);
            }
        }
        Ok(DgaPresentation { differential, ..p })
    }

    /// The ground presentation: no generators, unit only.
    pub fn ground() -> Self {
        DgaPresentation::build(Vec::new(), BTreeMap::new()).expect("empty presentation is valid")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn degree_of(&self, id: &str) -> Option<i64> {
        self.index.get(id).map(|&i| self.generators[i].degree)
    }

    /// The differential of a generator (zero unless assigned).
    pub fn differential_of(&self, id: &str) -> Result<Polynomial, DgaError> {
        if !self.index.contains_key(id) {
            return Err(DgaError::UnknownGenerator(id.to_string()));
        }
        Ok(self.differential.get(id).cloned().unwrap_or_default())
    }

    /// Degree of a word: the sum of its factor degrees.
    pub fn word_degree(&self, w: &Word) -> Result<i64, DgaError> {
        let mut degree = 0;
        for factor in w.factors() {
            degree += self
                .degree_of(factor)
                .ok_or_else(|| DgaError::UnknownGenerator(factor.clone()))?;
        }
        Ok(degree)
    }

    /// Common degree of a homogeneous polynomial, `None` for 0 or an
    /// inhomogeneous one.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Result<Option<i64>, DgaError> {
        let mut degree = None;
        for term in p.terms() {
            let d = self.word_degree(term)?;
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return Ok(None),
                _ => {}
            }
        }
        Ok(degree)
    }

    /// Extend the differential to a polynomial by F₂-linearity and the
    /// Leibniz rule ∂(vw) = ∂(v)w + v∂(w).
    pub fn apply_differential(&self, x: &Polynomial) -> Result<Polynomial, DgaError> {
        let mut result = Polynomial::zero();
        for word in x.terms() {
            self.differentiate_word_into(word, &mut result)?;
        }
        Ok(result)
    }

    fn differentiate_word_into(&self, word: &Word, out: &mut Polynomial) -> Result<(), DgaError> {
        let factors = word.factors();
        for (i, factor) in factors.iter().enumerate() {
            if !self.index.contains_key(factor) {
                return Err(DgaError::UnknownGenerator(factor.clone()));
            }
            let Some(dg) = self.differential.get(factor) else { continue };
            for replacement in dg.terms() {
                let mut new_factors =
                    Vec::with_capacity(factors.len() - 1 + replacement.len());
                new_factors.extend_from_slice(&factors[..i]);
                new_factors.extend_from_slice(replacement.factors());
                new_factors.extend_from_slice(&factors[i + 1..]);
                out.toggle(Word { factors: new_factors });
            }
        }
        Ok(())
    }

    /// Check ∂² = 0 on every generator. Exact, no truncation.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let results = crate::par::map(self.generators.clone(), |g| {
            let dg = self.differential.get(&g.id).cloned().unwrap_or_default();
            let ddg = self.apply_differential(&dg).expect("presentation is validated");
            (g.id, ddg)
        });
        let failures = results.into_iter().filter(|(_, ddg)| !ddg.is_zero()).collect();
        DSquaredReport { failures }
    }

    /// Amalgamated pushout of two presentations over a common sub-DGA,
    /// realized on generator sets as union over intersection. With
    /// `shared` empty this is the free product.
    pub fn pushout(
        p1: &DgaPresentation,
        p2: &DgaPresentation,
        shared: &BTreeSet<String>,
    ) -> Result<DgaPresentation, PushoutError> {
        for id in shared {
            if !p1.contains(id) || !p2.contains(id) {
                return Err(PushoutError::SharedNotPresent(id.clone()));
            }
            if p1.degree_of(id) != p2.degree_of(id) {
                return Err(PushoutError::SharedDegreeMismatch(id.clone()));
            }
            let d1 = p1.differential.get(id).cloned().unwrap_or_default();
            let d2 = p2.differential.get(id).cloned().unwrap_or_default();
            if d1 != d2 {
                return Err(PushoutError::SharedDifferentialMismatch(id.clone()));
            }
            for term in d1.terms() {
                for factor in term.factors() {
                    if !shared.contains(factor) {
                        return Err(PushoutError::SharedNotClosed {
                            gen: id.clone(),
                            escapes: factor.clone(),
                        });
                    }
                }
            }
        }
        for g in &p1.generators {
            if !shared.contains(&g.id) && p2.contains(&g.id) {
                return Err(PushoutError::IdCollision(g.id.clone()));
            }
        }

        // Union of generators: p1's in order, then p2's non-shared.
        let mut gens = Vec::new();
        let mut diffs = BTreeMap::new();
        for g in &p1.generators {
            gens.push((g.id.clone(), g.degree));
            if let Some(d) = p1.differential.get(&g.id) {
                diffs.insert(g.id.clone(), d.clone());
            }
        }
        for g in &p2.generators {
            if shared.contains(&g.id) {
                continue;
            }
            gens.push((g.id.clone(), g.degree));
            if let Some(d) = p2.differential.get(&g.id) {
                diffs.insert(g.id.clone(), d.clone());
            }
        }
        DgaPresentation::build(gens, diffs)
            .map_err(|e| match e {
                // Differentials were valid in their source presentations, so
                // the only way build can fail is an id-level inconsistency.
                DgaError::DuplicateId(id) => PushoutError::IdCollision(id),
                other => unreachable!("pushout of valid presentations failed: {other}"),
            })
    }
}
