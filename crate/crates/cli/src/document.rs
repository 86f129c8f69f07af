//! The on-disk structure document schema: plain JSON with integer tables
//! and index lists, no floating point. Emission is canonical (fixed key
//! order, two-space indent, trailing newline) so emit -> parse -> emit is
//! byte-identical and corpus files diff cleanly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use nearring_core::corpus::CorpusEntry;
use nearring_core::grading::GradedNearRing;
use nearring_core::mask::SubsetMask;
use nearring_core::monoid::{validate_monoid, FiniteMonoid};
use nearring_core::near_ring::{validate_near_ring, FiniteNearRing};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("unreadable document: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a valid structure document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("document annotation is wrong: {0}")]
    Annotation(String),
    #[error("labels array has {found} entries for a carrier of order {expected}")]
    LabelCount { expected: usize, found: usize },
    #[error("component {index} contains an out-of-range element index")]
    ComponentIndex { index: usize },
    #[error(transparent)]
    Monoid(#[from] nearring_core::monoid::MonoidError),
    #[error(transparent)]
    NearRing(#[from] nearring_core::near_ring::NearRingError),
    #[error(transparent)]
    Grading(#[from] nearring_core::grading::GradingError),
}

impl DocumentError {
    /// Syntactic/shape problems are malformed input (exit 2); algebraic
    /// failures are validation failures (exit 1).
    pub fn is_malformed(&self) -> bool {
        matches!(
            self,
            DocumentError::Io(_)
                | DocumentError::Syntax(_)
                | DocumentError::Annotation(_)
                | DocumentError::LabelCount { .. }
                | DocumentError::ComponentIndex { .. }
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MonoidDocument {
    pub name: String,
    pub order: usize,
    pub op: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct NearRingDocument {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Embedded grade monoid of a graded document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MonoidTable {
    pub order: usize,
    pub op: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GradedDocument {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    pub monoid: MonoidTable,
    /// One strictly increasing index list per grade.
    pub components: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind")]
pub enum StructureDocument {
    #[serde(rename = "monoid")]
    Monoid(MonoidDocument),
    #[serde(rename = "near-ring")]
    NearRing(NearRingDocument),
    #[serde(rename = "graded-near-ring")]
    Graded(GradedDocument),
}

impl StructureDocument {
    pub fn name(&self) -> &str {
        match self {
            StructureDocument::Monoid(d) => &d.name,
            StructureDocument::NearRing(d) => &d.name,
            StructureDocument::Graded(d) => &d.name,
        }
    }

    pub fn labels(&self) -> Option<&Vec<String>> {
        match self {
            StructureDocument::Monoid(d) => d.labels.as_ref(),
            StructureDocument::NearRing(d) => d.labels.as_ref(),
            StructureDocument::Graded(d) => d.labels.as_ref(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, DocumentError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Canonical serialization: declaration key order, two-space indent,
    /// table rows on single lines, trailing newline.
    pub fn emit(&self) -> String {
        let mut buf = Vec::new();
        let mut ser =
            serde_json::Serializer::with_formatter(&mut buf, TableFormatter::default());
        serde::Serialize::serialize(self, &mut ser).expect("documents always serialize");
        buf.push(b'\n');
        String::from_utf8(buf).expect("serialized documents are utf-8")
    }
}

/// Pretty formatter that keeps nested arrays (table rows, component lists)
/// on one line each.
#[derive(Default)]
struct TableFormatter {
    indent: usize,
    array_depth: usize,
    has_value: bool,
}

impl TableFormatter {
    fn newline_indent<W: std::io::Write + ?Sized>(&self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..self.indent {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn inline(&self) -> bool {
        self.array_depth >= 2
    }
}

impl serde_json::ser::Formatter for TableFormatter {
    fn begin_array<W: std::io::Write + ?Sized>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.array_depth += 1;
        if !self.inline() {
            self.indent += 1;
        }
        self.has_value = false;
        w.write_all(b"[")
    }

    fn end_array<W: std::io::Write + ?Sized>(&mut self, w: &mut W) -> std::io::Result<()> {
        let was_inline = self.inline();
        self.array_depth -= 1;
        if !was_inline {
            self.indent -= 1;
            if self.has_value {
                self.newline_indent(w)?;
            }
        }
        w.write_all(b"]")
    }

    fn begin_array_value<W: std::io::Write + ?Sized>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        if self.inline() {
            if !first {
                w.write_all(b", ")?;
            }
            Ok(())
        } else {
            if !first {
                w.write_all(b",")?;
            }
            self.newline_indent(w)
        }
    }

    fn end_array_value<W: std::io::Write + ?Sized>(&mut self, _w: &mut W) -> std::io::Result<()> {
        self.has_value = true;
        Ok(())
    }

    fn begin_object<W: std::io::Write + ?Sized>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.indent += 1;
        self.has_value = false;
        w.write_all(b"{")
    }

    fn end_object<W: std::io::Write + ?Sized>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.indent -= 1;
        if self.has_value {
            self.newline_indent(w)?;
        }
        w.write_all(b"}")
    }

    fn begin_object_key<W: std::io::Write + ?Sized>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        if !first {
            w.write_all(b",")?;
        }
        self.newline_indent(w)
    }

    fn begin_object_value<W: std::io::Write + ?Sized>(
        &mut self,
        w: &mut W,
    ) -> std::io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: std::io::Write + ?Sized>(&mut self, _w: &mut W) -> std::io::Result<()> {
        self.has_value = true;
        Ok(())
    }
}

fn check_labels(labels: &Option<Vec<String>>, order: usize) -> Result<(), DocumentError> {
    if let Some(l) = labels {
        if l.len() != order {
            return Err(DocumentError::LabelCount {
                expected: order,
                found: l.len(),
            });
        }
    }
    Ok(())
}

impl MonoidDocument {
    pub fn validate(&self) -> Result<FiniteMonoid, DocumentError> {
        check_labels(&self.labels, self.order)?;
        Ok(validate_monoid(self.order, self.op.clone(), self.identity)?)
    }
}

fn check_annotations(
    nr: &FiniteNearRing,
    zero: Option<usize>,
    one: Option<usize>,
) -> Result<(), DocumentError> {
    if let Some(z) = zero {
        if z != nr.zero() {
            return Err(DocumentError::Annotation(format!(
                "document claims zero = {z}, computed zero is {}",
                nr.zero()
            )));
        }
    }
    if let Some(o) = one {
        if nr.one() != Some(o) {
            return Err(DocumentError::Annotation(format!(
                "document claims one = {o}, computed identity is {:?}",
                nr.one()
            )));
        }
    }
    Ok(())
}

impl NearRingDocument {
    pub fn validate(&self) -> Result<FiniteNearRing, DocumentError> {
        check_labels(&self.labels, self.order)?;
        let nr = validate_near_ring(self.order, self.add.clone(), self.mul.clone())?;
        check_annotations(&nr, self.zero, self.one)?;
        Ok(nr)
    }
}

impl GradedDocument {
    pub fn validate(&self) -> Result<GradedNearRing, DocumentError> {
        check_labels(&self.labels, self.order)?;
        let nr = validate_near_ring(self.order, self.add.clone(), self.mul.clone())?;
        check_annotations(&nr, self.zero, self.one)?;
        let monoid = validate_monoid(
            self.monoid.order,
            self.monoid.op.clone(),
            self.monoid.identity,
        )?;
        let mut components = Vec::with_capacity(self.components.len());
        for (index, c) in self.components.iter().enumerate() {
            let mask = SubsetMask::from_indices(self.order, c.iter().copied())
                .map_err(|_| DocumentError::ComponentIndex { index })?;
            components.push(mask);
        }
        Ok(GradedNearRing::new(nr, monoid, components)?)
    }
}

pub fn doc_from_monoid(name: &str, m: &FiniteMonoid, labels: Option<Vec<String>>) -> MonoidDocument {
    MonoidDocument {
        name: name.to_string(),
        order: m.order(),
        op: m.table().to_vec(),
        identity: m.identity(),
        labels,
    }
}

pub fn doc_from_near_ring(
    name: &str,
    nr: &FiniteNearRing,
    labels: Option<Vec<String>>,
) -> NearRingDocument {
    NearRingDocument {
        name: name.to_string(),
        order: nr.order(),
        add: nr.add_table().to_vec(),
        mul: nr.mul_table().to_vec(),
        zero: Some(nr.zero()),
        one: nr.one(),
        labels,
    }
}

pub fn doc_from_graded(
    name: &str,
    gn: &GradedNearRing,
    labels: Option<Vec<String>>,
) -> GradedDocument {
    let nr = gn.ring();
    GradedDocument {
        name: name.to_string(),
        order: nr.order(),
        add: nr.add_table().to_vec(),
        mul: nr.mul_table().to_vec(),
        zero: Some(nr.zero()),
        one: nr.one(),
        monoid: MonoidTable {
            order: gn.monoid().order(),
            op: gn.monoid().table().to_vec(),
            identity: gn.monoid().identity(),
        },
        components: gn
            .grading()
            .components()
            .iter()
            .map(|c| c.indices())
            .collect(),
        labels,
    }
}

pub fn doc_from_entry(entry: &CorpusEntry) -> StructureDocument {
    StructureDocument::Graded(doc_from_graded(
        &entry.name,
        &entry.structure,
        Some(entry.labels.clone()),
    ))
}
