//! JSON-facing representations of the core types.
//!
//! Rational coefficients are carried as decimal strings so that no
//! precision is lost to floating point and the files stay readable by
//! any JSON tooling.  Partitions become arrays of parts, faces and set
//! partitions become arrays of blocks, and all collections are emitted
//! in the deterministic order of the underlying sorted containers.

use num::rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::faces::{Face, FaceAlgebraElement};
use crate::genfunc::{BivariateSeries, TheoremReport};
use crate::symfunc::SymFunc;

/// An exact rational number as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDto {
    pub numerator: String,
    pub denominator: String,
}

impl RationalDto {
    pub fn from_rational(x: &BigRational) -> Self {
        RationalDto { numerator: x.numer().to_string(), denominator: x.denom().to_string() }
    }
}

/// One face with its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTermDto {
    /// Blocks of the ordered set partition, in face order.
    pub face: Vec<Vec<u32>>,
    pub numerator: String,
    pub denominator: String,
}

/// A face-algebra element as a sparse list of face terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDto {
    pub n: u32,
    pub terms: Vec<FaceTermDto>,
}

pub fn element_to_dto(x: &FaceAlgebraElement) -> ElementDto {
    let terms = x
        .terms()
        .map(|(f, c)| {
            let r = RationalDto::from_rational(c);
            FaceTermDto { face: f.blocks(), numerator: r.numerator, denominator: r.denominator }
        })
        .collect();
    ElementDto { n: x.n(), terms }
}

/// The basis a symmetric function is expanded in when serialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Power sums.
    P,
    /// Schur functions.
    S,
}

/// One basis element with its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncTermDto {
    /// The indexing partition.
    pub index: Vec<u32>,
    pub numerator: String,
    pub denominator: String,
}

/// A symmetric function expanded in a named basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncDto {
    pub basis: Basis,
    pub terms: Vec<SymFuncTermDto>,
}

pub fn symfunc_to_dto(f: &SymFunc, basis: Basis) -> SymFuncDto {
    let expansion: Vec<(Partition, BigRational)> = match basis {
        Basis::P => f.terms().map(|(r, c)| (r.clone(), c.clone())).collect(),
        Basis::S => f.schur_expand().into_iter().collect(),
    };
    let terms = expansion
        .into_iter()
        .map(|(index, c)| {
            let r = RationalDto::from_rational(&c);
            SymFuncTermDto {
                index: index.parts().to_vec(),
                numerator: r.numerator,
                denominator: r.denominator,
            }
        })
        .collect();
    SymFuncDto { basis, terms }
}

/// One coefficient of the bivariate series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermDto {
    pub y: Vec<u32>,
    pub z: Vec<u32>,
    pub ch: SymFuncDto,
}

/// A truncated bivariate series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDto {
    pub trunc: u32,
    pub terms: Vec<SeriesTermDto>,
}

pub fn series_to_dto(series: &BivariateSeries, basis: Basis) -> SeriesDto {
    let terms = series
        .terms()
        .map(|((y, z), ch)| SeriesTermDto {
            y: y.parts().to_vec(),
            z: z.parts().to_vec(),
            ch: symfunc_to_dto(ch, basis),
        })
        .collect();
    SeriesDto { trunc: series.trunc(), terms }
}

/// One verified coefficient of the headline identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReportDto {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub dimension: u64,
    pub character: SymFuncDto,
}

/// A full verification run at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReportDto {
    pub n: u32,
    pub total_dimension: u64,
    pub pairs: Vec<PairReportDto>,
}

pub fn theorem_report_to_dto(report: &TheoremReport, basis: Basis) -> TheoremReportDto {
    let pairs = report
        .pairs
        .iter()
        .map(|p| PairReportDto {
            left: p.left.parts().to_vec(),
            right: p.right.parts().to_vec(),
            dimension: p.dimension,
            character: symfunc_to_dto(&p.character, basis),
        })
        .collect();
    TheoremReportDto { n: report.n, total_dimension: report.total_dimension(), pairs }
}

/// One nonzero Cartan invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanEntryDto {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub value: u64,
}

pub fn cartan_to_dto(
    matrix: &std::collections::BTreeMap<(Partition, Partition), u64>,
) -> Vec<CartanEntryDto> {
    matrix
        .iter()
        .map(|((lambda, mu), &value)| CartanEntryDto {
            lambda: lambda.parts().to_vec(),
            mu: mu.parts().to_vec(),
            value,
        })
        .collect()
}

/// A face with the partition multiset it is annihilated against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDto {
    pub blocks: Vec<Vec<u32>>,
}

pub fn face_to_dto(f: &Face) -> FaceDto {
    FaceDto { blocks: f.blocks() }
}
