//! Combinatorial grading calculus for Reeb chords.
//!
//! Gradings are computed from caller-supplied path data: counts of cusp
//! edges crossed downwards/upwards by capping paths, Morse indices of
//! the local function differences, and connecting-chord indices for
//! multi-component links. The geometric choices behind these integers
//! (which capping path, which connecting chord) are non-canonical and
//! live with the caller; only the resulting integers enter here.
//!
//! The dipping construction near an index-k handle replaces each chord
//! b of the sub-Legendrian by five chords b[m1], b[s1], b[s2], b[m2],
//! b[h] whose degrees are shifted by k, 1, k−1, 0, 0 on top of a common
//! component correction K(i−, i+).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dga::{DgaPresentation, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("no path data stored for component pair ({0}, {1})")]
    MissingPairData(usize, usize),
}

/// Per-chord capping data: cusp-edge crossing counts of the two capping
/// paths, the Morse index of the chord, and the connecting-chord index
/// of the component pair its endpoints lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CappingData {
    /// Cusp edges the positive-end capping path crosses downwards.
    pub d_plus: u32,
    /// Cusp edges the positive-end capping path crosses upwards.
    pub u_plus: u32,
    pub d_minus: u32,
    pub u_minus: u32,
    /// Morse index of the chord as a critical point of the local
    /// function difference.
    pub morse_index: i64,
    /// Connecting index of the ordered component pair (i−, i+); zero
    /// for chords with both ends on one component.
    pub connecting_index: i64,
}

/// Grading of a Reeb chord from its capping data:
/// D(γ₊) − U(γ₊) − D(γ₋) + U(γ₋) + I(c) + I_{i−i+} − 1.
pub fn chord_grading(c: &CappingData) -> i64 {
    i64::from(c.d_plus) - i64::from(c.u_plus) - i64::from(c.d_minus) + i64::from(c.u_minus)
        + c.morse_index
        + c.connecting_index
        - 1
}

/// Path data for one stored connecting chord c_ij between components
/// i and j: the cusp counts of the chosen admissible paths to its two
/// endpoints and the chord's Morse index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectingPathData {
    /// D of the path to the upper endpoint of c_ij (in component j).
    pub d_to_plus: u32,
    pub u_to_plus: u32,
    /// D of the path to the lower endpoint (in component i).
    pub d_to_minus: u32,
    pub u_to_minus: u32,
    pub morse_index: i64,
}

impl ConnectingPathData {
    fn index(&self) -> i64 {
        i64::from(self.d_to_plus) - i64::from(self.u_to_plus) - i64::from(self.d_to_minus)
            + i64::from(self.u_to_minus)
            - self.morse_index
    }
}

/// Table of connecting-chord indices. Data is stored for one ordered
/// pair per component pair; the reverse query is the negative, the
/// diagonal is zero.
#[derive(Debug, Clone, Default)]
pub struct ConnectingIndexTable {
    entries: BTreeMap<(usize, usize), ConnectingPathData>,
}

impl ConnectingIndexTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize, j: usize, data: ConnectingPathData) {
        self.entries.insert((i, j), data);
    }

    /// I_ii = 0, I_ij from the stored data, I_ji = −I_ij when only the
    /// (i, j) entry is stored.
    pub fn connecting_index(&self, i: usize, j: usize) -> Result<i64, GradingError> {
        if i == j {
            return Ok(0);
        }
        if let Some(data) = self.entries.get(&(i, j)) {
            return Ok(data.index());
        }
        if let Some(data) = self.entries.get(&(j, i)) {
            return Ok(-data.index());
        }
        Err(GradingError::MissingPairData(i, j))
    }
}

/// Which way the stored connecting chord of an unordered component pair
/// runs, relative to the queried ordered pair (i−, i+).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordOrientation {
    /// The stored chord is c_{i−i+}.
    MinusToPlus,
    /// The stored chord is c_{i+i−}; its Morse index enters negated.
    PlusToMinus,
}

/// Path data for one ordered component pair (i−, i+) of the
/// sub-Legendrian, used by the K-function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentPairData {
    /// D of the connecting path to the ambient component carrying i+.
    pub d_plus_con: u32,
    pub u_plus_con: u32,
    pub d_minus_con: u32,
    pub u_minus_con: u32,
    /// Morse index I′ of the connecting chord of the sub-Legendrian.
    pub connecting_morse_index: i64,
    /// Ambient connecting index I_{l−l+} of the components of the full
    /// link containing the pair.
    pub ambient_index: i64,
    pub orientation: ChordOrientation,
}

/// Connecting-path data per ordered component pair of the
/// sub-Legendrian. The diagonal is absent by definition (K(i,i) = 0).
#[derive(Debug, Clone, Default)]
pub struct ComponentPathData {
    pairs: BTreeMap<(usize, usize), ComponentPairData>,
}

impl ComponentPathData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i_minus: usize, i_plus: usize, data: ComponentPairData) {
        self.pairs.insert((i_minus, i_plus), data);
    }
}

/// The component correction K(i−, i+): zero on the diagonal, otherwise
/// the cusp-count difference of the two connecting paths plus the
/// connecting chord's Morse index (negated when the stored chord runs
/// i+ → i−) plus the ambient index.
pub fn k_function(
    pairs: &ComponentPathData,
    i_minus: usize,
    i_plus: usize,
) -> Result<i64, GradingError> {
    if i_minus == i_plus {
        return Ok(0);
    }
    let data = pairs
        .pairs
        .get(&(i_minus, i_plus))
        .ok_or(GradingError::MissingPairData(i_minus, i_plus))?;
    let morse = match data.orientation {
        ChordOrientation::MinusToPlus => data.connecting_morse_index,
        ChordOrientation::PlusToMinus => -data.connecting_morse_index,
    };
    Ok(i64::from(data.d_plus_con) - i64::from(data.u_plus_con) - i64::from(data.d_minus_con)
        + i64::from(data.u_minus_con)
        + morse
        + data.ambient_index)
}

/// The five dipping positions. `M1`/`S1` sit at the outer critical
/// level of the dipping function, `S2`/`M2` at the inner one, and `H`
/// is the copy at the handle minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DipPosition {
    M1,
    S1,
    S2,
    M2,
    H,
}

impl DipPosition {
    pub const ALL: [DipPosition; 5] =
        [DipPosition::M1, DipPosition::S1, DipPosition::S2, DipPosition::M2, DipPosition::H];

    /// Id suffix used for emitted generators, e.g. `b[m1]`.
    pub fn suffix(self) -> &'static str {
        match self {
            DipPosition::M1 => "m1",
            DipPosition::S1 => "s1",
            DipPosition::S2 => "s2",
            DipPosition::M2 => "m2",
            DipPosition::H => "h",
        }
    }
}

/// Degree shifts of the five dipping copies for an index-k handle:
/// m1 ↦ k, s1 ↦ 1, s2 ↦ k−1, m2 ↦ 0, h ↦ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DipShiftTable {
    pub handle_index: i64,
}

impl DipShiftTable {
    /// The table requires k ≥ 1.
    pub fn new(handle_index: i64) -> Self {
        assert!(handle_index >= 1, "handle index must be at least 1");
        DipShiftTable { handle_index }
    }

    pub fn shift(&self, position: DipPosition) -> i64 {
        match position {
            DipPosition::M1 => self.handle_index,
            DipPosition::S1 => 1,
            DipPosition::S2 => self.handle_index - 1,
            DipPosition::M2 => 0,
            DipPosition::H => 0,
        }
    }
}

/// Emit the five dipped generators for every generator of the sub-DGA.
///
/// Each b with endpoints on components (i−, i+) yields b[m1], b[s1],
/// b[s2], b[m2], b[h] with degrees |b| + K(i−, i+) + {k, 1, k−1, 0, 0}.
/// Only degrees are produced; differentials come from elsewhere.
pub fn dip_generators(
    sub: &DgaPresentation,
    handle_index: i64,
    pairs: &ComponentPathData,
    endpoints: &BTreeMap<String, (usize, usize)>,
) -> Result<Vec<Generator>, GradingError> {
    dip_generators_with_k(sub, handle_index, |i, j| k_function(pairs, i, j), endpoints)
}

/// As [`dip_generators`], but with the K-function supplied directly
/// (for callers that carry precomputed K values rather than path data).
pub fn dip_generators_with_k(
    sub: &DgaPresentation,
    handle_index: i64,
    k_of: impl Fn(usize, usize) -> Result<i64, GradingError>,
    endpoints: &BTreeMap<String, (usize, usize)>,
) -> Result<Vec<Generator>, GradingError> {
    assert!(handle_index >= 1, "handle index must be at least 1");
    let shifts = DipShiftTable::new(handle_index);
    let mut out = Vec::with_capacity(sub.generators().len() * 5);
    for g in sub.generators() {
        let &(i_minus, i_plus) = endpoints
            .get(&g.id)
            .unwrap_or_else(|| panic!("endpoints missing for generator `{}`", g.id));
        let correction = k_of(i_minus, i_plus)?;
        for position in DipPosition::ALL {
            out.push(Generator::new(
                format!("{}[{}]", g.id, position.suffix()),
                g.degree + correction + shifts.shift(position),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::dga::DgaPresentation;

    #[test]
    fn grading_with_zero_paths_is_index_minus_one() {
        let c = CappingData {
            d_plus: 0,
            u_plus: 0,
            d_minus: 0,
            u_minus: 0,
            morse_index: 4,
            connecting_index: 0,
        };
        assert_eq!(chord_grading(&c), 3);
    }

    #[test]
    fn grading_of_standard_unknot_chord() {
        // Capping path of c₊ crosses one cusp downwards, Morse index 1.
        let c = CappingData {
            d_plus: 1,
            u_plus: 0,
            d_minus: 0,
            u_minus: 0,
            morse_index: 1,
            connecting_index: 0,
        };
        assert_eq!(chord_grading(&c), 1);
    }

    #[test]
    fn grading_arithmetic_substitution() {
        let c = CappingData {
            d_plus: 2,
            u_plus: 0,
            d_minus: 0,
            u_minus: 1,
            morse_index: 0,
            connecting_index: -1,
        };
        assert_eq!(chord_grading(&c), 1);
    }

    #[test]
    fn grading_is_affine_in_path_counts() {
        let base = CappingData {
            d_plus: 3,
            u_plus: 1,
            d_minus: 2,
            u_minus: 0,
            morse_index: 2,
            connecting_index: 1,
        };
        let g = chord_grading(&base);
        assert_eq!(chord_grading(&CappingData { d_plus: 4, ..base }), g + 1);
        assert_eq!(chord_grading(&CappingData { u_plus: 2, ..base }), g - 1);
        assert_eq!(chord_grading(&CappingData { d_minus: 3, ..base }), g - 1);
        assert_eq!(chord_grading(&CappingData { u_minus: 1, ..base }), g + 1);
    }

    #[test]
    fn connecting_index_table() {
        let mut table = ConnectingIndexTable::new();
        assert_eq!(table.connecting_index(2, 2).unwrap(), 0);

        table.insert(
            1,
            2,
            ConnectingPathData {
                d_to_plus: 1,
                u_to_plus: 0,
                d_to_minus: 0,
                u_to_minus: 0,
                morse_index: 1,
            },
        );
        // 1 − 0 − 0 + 0 − 1 = 0.
        assert_eq!(table.connecting_index(1, 2).unwrap(), 0);

        table.insert(
            3,
            4,
            ConnectingPathData {
                d_to_plus: 4,
                u_to_plus: 0,
                d_to_minus: 0,
                u_to_minus: 0,
                morse_index: 1,
            },
        );
        assert_eq!(table.connecting_index(3, 4).unwrap(), 3);
        assert_eq!(table.connecting_index(4, 3).unwrap(), -3);
        assert_eq!(
            table.connecting_index(3, 4).unwrap() + table.connecting_index(4, 3).unwrap(),
            0
        );
        assert!(table.connecting_index(1, 5).is_err());
    }

    #[test]
    fn k_function_diagonal_and_sign_flip() {
        let pairs = ComponentPathData::new();
        assert_eq!(k_function(&pairs, 7, 7).unwrap(), 0);

        let mut pairs = ComponentPathData::new();
        pairs.insert(
            1,
            2,
            ComponentPairData {
                d_plus_con: 0,
                u_plus_con: 0,
                d_minus_con: 0,
                u_minus_con: 0,
                connecting_morse_index: 1,
                ambient_index: 0,
                orientation: ChordOrientation::PlusToMinus,
            },
        );
        assert_eq!(k_function(&pairs, 1, 2).unwrap(), -1);
        assert!(k_function(&pairs, 2, 1).is_err());
    }

    fn unknot_sub() -> DgaPresentation {
        DgaPresentation::build(vec![("b".to_string(), 1)], BTreeMap::new()).unwrap()
    }

    fn diagonal_endpoints(p: &DgaPresentation) -> BTreeMap<String, (usize, usize)> {
        p.generators().iter().map(|g| (g.id.clone(), (1, 1))).collect()
    }

    #[test]
    fn dip_unknot_index_two() {
        let sub = unknot_sub();
        let endpoints = diagonal_endpoints(&sub);
        let gens =
            dip_generators(&sub, 2, &ComponentPathData::new(), &endpoints).unwrap();
        let degrees: BTreeMap<String, i64> =
            gens.iter().map(|g| (g.id.clone(), g.degree)).collect();
        let expected: BTreeMap<String, i64> = [
            ("b[m1]".to_string(), 3),
            ("b[s1]".to_string(), 2),
            ("b[s2]".to_string(), 2),
            ("b[m2]".to_string(), 1),
            ("b[h]".to_string(), 1),
        ]
        .into();
        assert_eq!(degrees, expected);
    }

    #[test]
    fn dip_unknot_index_one() {
        let sub = unknot_sub();
        let endpoints = diagonal_endpoints(&sub);
        let gens =
            dip_generators(&sub, 1, &ComponentPathData::new(), &endpoints).unwrap();
        let degrees: BTreeMap<String, i64> =
            gens.iter().map(|g| (g.id.clone(), g.degree)).collect();
        let expected: BTreeMap<String, i64> = [
            ("b[m1]".to_string(), 2),
            ("b[s1]".to_string(), 2),
            ("b[s2]".to_string(), 1),
            ("b[m2]".to_string(), 1),
            ("b[h]".to_string(), 1),
        ]
        .into();
        assert_eq!(degrees, expected);
    }

    #[test]
    fn dip_with_nonzero_k() {
        let sub = unknot_sub();
        let endpoints: BTreeMap<String, (usize, usize)> =
            [("b".to_string(), (1, 2))].into();
        let gens = dip_generators_with_k(&sub, 3, |_, _| Ok(2), &endpoints).unwrap();
        let degrees: BTreeMap<String, i64> =
            gens.iter().map(|g| (g.id.clone(), g.degree)).collect();
        let expected: BTreeMap<String, i64> = [
            ("b[m1]".to_string(), 6),
            ("b[s1]".to_string(), 4),
            ("b[s2]".to_string(), 5),
            ("b[m2]".to_string(), 3),
            ("b[h]".to_string(), 3),
        ]
        .into();
        assert_eq!(degrees, expected);
    }

    #[test]
    fn shift_multiset_for_index_one_handle() {
        let t = DipShiftTable::new(1);
        let mut shifts: Vec<i64> = [DipPosition::M1, DipPosition::S1, DipPosition::S2, DipPosition::M2]
            .iter()
            .map(|&p| t.shift(p))
            .collect();
        shifts.sort_unstable();
        assert_eq!(shifts, vec![0, 0, 1, 1]);
    }
}
