//! JSON documents for spaces, lattices, support posets and filtering subsets.
//!
//! A space document looks like
//!
//! ```json
//! { "points": ["g", "c"], "opens": [[], [0], [0, 1]] }
//! ```
//!
//! with each open set given as ascending point indices. A lattice document
//! carries the element count, the order as row-major bit strings, and the
//! indices of the bounds:
//!
//! ```json
//! { "elements": 3, "leq": ["111", "011", "001"], "bottom": 0, "top": 2 }
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ptloc_core::lattice::BoundedDistributiveLattice;
use ptloc_core::loc::FilteringSubset;
use ptloc_core::mask::SubsetMask;
use ptloc_core::support::SupportPoset;
use ptloc_core::topology::FiniteSpace;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        message: message.into(),
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub elements: usize,
    pub leq: Vec<String>,
    pub bottom: usize,
    pub top: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportPosetDoc {
    pub space: SpaceDoc,
    /// Each closed set as ascending point indices, in poset order.
    pub closed_sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilteringDoc {
    pub support: SupportPosetDoc,
    /// Each filtering subset as indices into `support.closed_sets`.
    pub filtering_subsets: Vec<Vec<usize>>,
}

/// Either kind of input accepted by `points`.
#[derive(Clone, Debug)]
pub enum Document {
    Space(FiniteSpace),
    Lattice(BoundedDistributiveLattice),
}

fn mask_indices(m: SubsetMask) -> Vec<usize> {
    m.iter().collect()
}

fn indices_mask(name: &str, ix: &[usize], n: usize) -> Result<SubsetMask, FormatError> {
    if let Some(&i) = ix.iter().find(|&&i| i >= n) {
        return Err(field(name, format!("index {i} out of range for {n} points")));
    }
    if ix.windows(2).any(|w| w[0] >= w[1]) {
        return Err(field(name, "indices must be strictly ascending"));
    }
    Ok(SubsetMask::from_indices(ix.iter().copied()))
}

impl SpaceDoc {
    pub fn from_space(x: &FiniteSpace) -> Self {
        SpaceDoc {
            points: x.labels().to_vec(),
            opens: x.opens().iter().map(|&u| mask_indices(u)).collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, FormatError> {
        let n = self.points.len();
        let mut masks = Vec::with_capacity(self.opens.len());
        for (i, ix) in self.opens.iter().enumerate() {
            masks.push(indices_mask(&format!("opens[{i}]"), ix, n)?);
        }
        let name = |m: SubsetMask| -> String {
            let names: Vec<&str> = m.iter().map(|i| self.points[i].as_str()).collect();
            format!("{{{}}}", names.join(", "))
        };
        FiniteSpace::from_opens(self.points.clone(), &masks).map_err(|e| {
            use ptloc_core::topology::TopologyError::*;
            match e {
                NotUnionClosed { left, right } => field(
                    "opens",
                    format!("{} ∪ {} is not open", name(left), name(right)),
                ),
                NotIntersectionClosed { left, right } => field(
                    "opens",
                    format!("{} ∩ {} is not open", name(left), name(right)),
                ),
                DuplicateLabel(_) | TooManyPoints(_) => field("points", e.to_string()),
                other => field("opens", other.to_string()),
            }
        })
    }
}

impl LatticeDoc {
    pub fn from_lattice(l: &BoundedDistributiveLattice) -> Self {
        let n = l.len();
        LatticeDoc {
            elements: n,
            leq: (0..n)
                .map(|a| (0..n).map(|b| if l.leq(a, b) { '1' } else { '0' }).collect())
                .collect(),
            bottom: l.bottom(),
            top: l.top(),
            labels: Some(l.labels().to_vec()),
        }
    }

    pub fn to_lattice(&self) -> Result<BoundedDistributiveLattice, FormatError> {
        let n = self.elements;
        if self.leq.len() != n {
            return Err(field("leq", format!("expected {n} rows, found {}", self.leq.len())));
        }
        let mut leq = Vec::with_capacity(n * n);
        for (r, row) in self.leq.iter().enumerate() {
            if row.chars().count() != n {
                return Err(field(format!("leq[{r}]"), format!("expected {n} bits")));
            }
            for c in row.chars() {
                leq.push(match c {
                    '1' => true,
                    '0' => false,
                    _ => return Err(field(format!("leq[{r}]"), format!("invalid bit `{c}`"))),
                });
            }
        }
        let labels = match &self.labels {
            Some(l) if l.len() != n => {
                return Err(field("labels", format!("expected {n} labels")));
            }
            Some(l) => l.clone(),
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let lattice = BoundedDistributiveLattice::from_order(labels, leq)
            .map_err(|e| field("leq", e.to_string()))?;
        if lattice.bottom() != self.bottom {
            return Err(field("bottom", format!("least element is {}", lattice.bottom())));
        }
        if lattice.top() != self.top {
            return Err(field("top", format!("greatest element is {}", lattice.top())));
        }
        Ok(lattice)
    }
}

impl SupportPosetDoc {
    pub fn from_poset(ps: &SupportPoset) -> Self {
        SupportPosetDoc {
            space: SpaceDoc::from_space(ps.space()),
            closed_sets: ps.elements().iter().map(|&z| mask_indices(z)).collect(),
        }
    }

    /// Rebuilds the poset and checks that the listed closed sets are exactly its elements.
    pub fn to_poset(&self) -> Result<SupportPoset, FormatError> {
        let space = self.space.to_space()?;
        let ps = ptloc_core::support::thomason_supports(&space);
        let n = space.len();
        let mut listed = Vec::with_capacity(self.closed_sets.len());
        for (i, ix) in self.closed_sets.iter().enumerate() {
            listed.push(indices_mask(&format!("closed_sets[{i}]"), ix, n)?);
        }
        if listed != ps.elements() {
            return Err(field(
                "closed_sets",
                "does not list the closed sets of the space in canonical order",
            ));
        }
        Ok(ps)
    }
}

impl FilteringDoc {
    pub fn new(ps: &SupportPoset, subsets: &[FilteringSubset]) -> Self {
        FilteringDoc {
            support: SupportPosetDoc::from_poset(ps),
            filtering_subsets: subsets.iter().map(|s| s.members().to_vec()).collect(),
        }
    }

    pub fn to_subsets(&self) -> Result<(SupportPoset, Vec<FilteringSubset>), FormatError> {
        let ps = self.support.to_poset()?;
        let mut out = Vec::with_capacity(self.filtering_subsets.len());
        for (i, members) in self.filtering_subsets.iter().enumerate() {
            let s = FilteringSubset::new(&ps, members.clone())
                .map_err(|e| field(format!("filtering_subsets[{i}]"), e.to_string()))?;
            out.push(s);
        }
        Ok((ps, out))
    }
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, FormatError> {
    serde_json::from_str::<SpaceDoc>(text)?.to_space()
}

pub fn parse_lattice(text: &str) -> Result<BoundedDistributiveLattice, FormatError> {
    serde_json::from_str::<LatticeDoc>(text)?.to_lattice()
}

/// Parses a space or lattice document, telling them apart by their fields.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let is_lattice = value.get("leq").is_some();
    if is_lattice {
        Ok(Document::Lattice(parse_lattice(text)?))
    } else {
        Ok(Document::Space(parse_space(text)?))
    }
}

pub fn space_to_json(x: &FiniteSpace, pretty: bool) -> String {
    to_json(&SpaceDoc::from_space(x), pretty)
}

pub fn to_json<T: Serialize>(doc: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(doc).expect("documents serialize")
    } else {
        serde_json::to_string(doc).expect("documents serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ptloc_core::lattice::open_set_lattice;
    use ptloc_core::loc::filtering_subsets;
    use ptloc_core::support::thomason_supports;

    #[test]
    fn space_round_trip() {
        let x = FiniteSpace::sierpinski();
        let text = space_to_json(&x, true);
        assert_eq!(parse_space(&text).unwrap(), x);
        assert_eq!(
            space_to_json(&x, false),
            r#"{"points":["g","c"],"opens":[[],[0],[0,1]]}"#
        );
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = parse_space("{\n  \"points\": [\"a\"],\n  \"opens\": [[], [0],]\n}").unwrap_err();
        match err {
            FormatError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_space(r#"{"points": ["a"], "opens": [], "extra": 1}"#).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, .. }));
    }

    #[test]
    fn semantic_errors_name_the_field() {
        let err = parse_space(r#"{"points": ["a", "b"], "opens": [[], [0, 2], [0, 1]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "field `opens[1]`: index 2 out of range for 2 points");
        let err = parse_space(r#"{"points": ["a", "b"], "opens": [[], [1, 0]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("field `opens[1]`"));
        let err = parse_space(r#"{"points": ["a", "b"], "opens": [[], [0]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "field `opens`: the full point set is not open");
        let err =
            parse_space(r#"{"points": ["a", "b", "c"], "opens": [[], [0], [1], [0, 1, 2]]}"#)
                .unwrap_err();
        assert_eq!(err.to_string(), "field `opens`: {a} ∪ {b} is not open");
        let err = parse_space(r#"{"points": ["a", "a"], "opens": [[], [0, 1]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("field `points`"));
    }

    #[test]
    fn lattice_round_trip() {
        let l = open_set_lattice(&FiniteSpace::discrete(2));
        let doc = LatticeDoc::from_lattice(&l);
        assert_eq!(doc.leq, ["1111", "0101", "0011", "0001"]);
        let back = parse_lattice(&to_json(&doc, false)).unwrap();
        assert_eq!(back.tables(), l.tables());
    }

    #[test]
    fn lattice_validation() {
        // 2-chain with wrong top
        let err = parse_lattice(r#"{"elements": 2, "leq": ["11", "01"], "bottom": 0, "top": 0}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("field `top`"));
        let err = parse_lattice(r#"{"elements": 2, "leq": ["11", "0x"], "bottom": 0, "top": 1}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("field `leq[1]`"));
        // M3 is rejected
        let m3 = r#"{"elements": 5, "leq": ["11111", "01001", "00101", "00011", "00001"], "bottom": 0, "top": 4}"#;
        assert!(parse_lattice(m3).unwrap_err().to_string().contains("NotDistributive"));
    }

    #[test]
    fn document_detection() {
        let l = r#"{"elements": 1, "leq": ["1"], "bottom": 0, "top": 0}"#;
        assert!(matches!(parse_document(l).unwrap(), Document::Lattice(_)));
        let s = r#"{"points": [], "opens": [[]]}"#;
        assert!(matches!(parse_document(s).unwrap(), Document::Space(_)));
    }

    #[test]
    fn support_and_filtering_round_trip() {
        let x = FiniteSpace::chain(3);
        let ps = thomason_supports(&x);
        let subsets = filtering_subsets(&ps);
        let doc = FilteringDoc::new(&ps, &subsets);
        let text = to_json(&doc, false);
        let parsed: FilteringDoc = serde_json::from_str(&text).unwrap();
        let (ps2, subsets2) = parsed.to_subsets().unwrap();
        assert_eq!(ps2, ps);
        assert_eq!(subsets2, subsets);

        let mut bad = doc.clone();
        bad.filtering_subsets.push(vec![0]);
        assert!(bad.to_subsets().unwrap_err().to_string().starts_with("field `filtering_subsets[4]`"));
        let mut bad = doc.support.clone();
        bad.closed_sets.pop();
        assert!(bad.to_poset().is_err());
    }
}
