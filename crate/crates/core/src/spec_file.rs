//! The TOML code-spec format.
//!
//! ```toml
//! kind = "finite"
//! p = 3
//! s = 2
//! r = 1
//! reps = ["1", "1:1"]
//! betas = [["1", "0:1"], ["1", "0:1"]]
//! k = 2
//! ```
//!
//! `gamma` is optional (finite kind only). For `kind = "rational"` the
//! field is F_p(z) with δ = d/dz and `s`, `r`, `gamma` must be absent.
//! Elements use the field's text form. Errors carry the line of the
//! offending value.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::codes::{CodeSpec, LinearizedRsCode};
use crate::error::{Error, Result};
use crate::field::{make_field, Field, FieldDescriptor, FieldKind, GaloisField, RationalFunctionField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub kind: FieldKind,
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    pub reps: Vec<String>,
    pub betas: Vec<Vec<String>>,
    pub k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: Spanned<FieldKind>,
    p: Spanned<u32>,
    #[serde(default)]
    s: Option<Spanned<usize>>,
    #[serde(default)]
    r: Option<Spanned<usize>>,
    #[serde(default)]
    gamma: Option<Spanned<String>>,
    reps: Spanned<Vec<Spanned<String>>>,
    betas: Spanned<Vec<Spanned<Vec<Spanned<String>>>>>,
    k: Spanned<usize>,
}

/// A parsed spec plus the source spans needed for error messages.
struct Anchors {
    text: String,
    kind: Range<usize>,
    p: Range<usize>,
    gamma: Option<Range<usize>>,
    reps: Vec<Range<usize>>,
    blocks: Vec<Range<usize>>,
    betas: Vec<Vec<Range<usize>>>,
    k: Range<usize>,
    whole_betas: Range<usize>,
}

impl Anchors {
    fn line(&self, span: &Range<usize>) -> usize {
        let end = span.start.min(self.text.len());
        self.text[..end].matches('\n').count() + 1
    }

    fn err(&self, span: &Range<usize>, msg: impl std::fmt::Display) -> Error {
        Error::Spec(format!("line {}: {msg}", self.line(span)))
    }
}

/// A validated code over whichever field the spec names.
#[derive(Clone, Debug)]
pub enum AnyCode {
    Finite(LinearizedRsCode<GaloisField>),
    Rational(LinearizedRsCode<RationalFunctionField>),
}

/// Runs a generic expression against the code inside an [`AnyCode`].
#[macro_export]
macro_rules! with_code {
    ($code:expr, $c:ident => $body:expr) => {
        match $code {
            $crate::spec_file::AnyCode::Finite($c) => $body,
            $crate::spec_file::AnyCode::Rational($c) => $body,
        }
    };
}

impl AnyCode {
    pub fn to_file(&self) -> CodeSpecFile {
        match self {
            AnyCode::Finite(c) => {
                let f = c.field();
                let mut file = file_from_spec(&c.spec, FieldKind::Finite, f.p());
                file.s = Some(f.s());
                file.r = Some(f.r());
                file.gamma = f.gamma().map(|g| f.format_elem(g));
                file
            }
            AnyCode::Rational(c) => file_from_spec(&c.spec, FieldKind::Rational, c.field().p()),
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyCode::Finite(c) => FieldDescriptor::Finite(c.field().clone()),
            AnyCode::Rational(c) => FieldDescriptor::Rational(c.field().clone()),
        }
    }
}

fn file_from_spec<F: Field>(spec: &CodeSpec<F>, kind: FieldKind, p: u32) -> CodeSpecFile {
    let f = spec.field();
    CodeSpecFile {
        kind,
        p,
        s: None,
        r: None,
        gamma: None,
        reps: spec.reps().iter().map(|a| f.format_elem(a)).collect(),
        betas: spec
            .betas()
            .iter()
            .map(|b| b.iter().map(|x| f.format_elem(x)).collect())
            .collect(),
        k: spec.k(),
    }
}

impl CodeSpecFile {
    pub fn render(&self) -> String {
        toml::to_string(self).expect("spec files always serialize")
    }

    /// Syntax-level parse; values are not validated.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(parse_raw(text)?.0)
    }

    /// Parses and validates, producing the code.
    pub fn load(text: &str) -> Result<AnyCode> {
        let (file, anchors) = parse_raw(text)?;
        file.build(&anchors)
    }

    /// Validates this spec (errors cite lines of its rendered form).
    pub fn instantiate(&self) -> Result<AnyCode> {
        Self::load(&self.render())
    }

    fn build(&self, at: &Anchors) -> Result<AnyCode> {
        let field_err = |e: Error| at.err(&at.p, e);
        match self.kind {
            FieldKind::Finite => {
                let s = self.s.ok_or_else(|| at.err(&at.kind, "finite kind needs `s`"))?;
                let r = self.r.ok_or_else(|| at.err(&at.kind, "finite kind needs `r`"))?;
                let base = GaloisField::new(self.p, s, r).map_err(field_err)?;
                let field = match (&self.gamma, &at.gamma) {
                    (Some(g), Some(span)) => {
                        let g = base.parse_elem(g).map_err(|e| at.err(span, e))?;
                        base.with_gamma(g)
                    }
                    _ => base,
                };
                Ok(AnyCode::Finite(self.build_code(field, at)?))
            }
            FieldKind::Rational => {
                if self.s.is_some() || self.r.is_some() || self.gamma.is_some() {
                    return Err(at.err(&at.kind, "rational kind takes no `s`, `r` or `gamma`"));
                }
                let FieldDescriptor::Rational(field) =
                    make_field(FieldKind::Rational, self.p, 0, 0, None, true).map_err(field_err)?
                else {
                    unreachable!()
                };
                Ok(AnyCode::Rational(self.build_code(field, at)?))
            }
        }
    }

    fn build_code<F: Field>(&self, field: F, at: &Anchors) -> Result<LinearizedRsCode<F>> {
        let reps = self
            .reps
            .iter()
            .zip(&at.reps)
            .map(|(s, span)| field.parse_elem(s).map_err(|e| at.err(span, e)))
            .collect::<Result<Vec<_>>>()?;
        let betas = self
            .betas
            .iter()
            .zip(&at.betas)
            .map(|(block, spans)| {
                block
                    .iter()
                    .zip(spans)
                    .map(|(s, span)| field.parse_elem(s).map_err(|e| at.err(span, e)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = CodeSpec::new(field, reps, betas, self.k).map_err(|e| {
            let span = match &e {
                Error::DimensionOutOfRange { .. } => &at.k,
                Error::DependentBetas { block }
                | Error::ZeroBeta { block }
                | Error::BlockTooLong { block, .. } => &at.blocks[*block],
                Error::ConjugateReps(_, j) => &at.reps[*j],
                _ => &at.whole_betas,
            };
            at.err(span, e)
        })?;
        Ok(LinearizedRsCode::new(spec))
    }
}

fn parse_raw(text: &str) -> Result<(CodeSpecFile, Anchors)> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let line = e
            .span()
            .map_or(1, |s| text[..s.start.min(text.len())].matches('\n').count() + 1);
        Error::Spec(format!("line {line}: {}", e.message()))
    })?;
    let anchors = Anchors {
        text: text.to_string(),
        kind: raw.kind.span(),
        p: raw.p.span(),
        gamma: raw.gamma.as_ref().map(Spanned::span),
        reps: raw.reps.get_ref().iter().map(Spanned::span).collect(),
        blocks: raw.betas.get_ref().iter().map(Spanned::span).collect(),
        betas: raw
            .betas
            .get_ref()
            .iter()
            .map(|b| b.get_ref().iter().map(Spanned::span).collect())
            .collect(),
        k: raw.k.span(),
        whole_betas: raw.betas.span(),
    };
    let file = CodeSpecFile {
        kind: raw.kind.into_inner(),
        p: raw.p.into_inner(),
        s: raw.s.map(Spanned::into_inner),
        r: raw.r.map(Spanned::into_inner),
        gamma: raw.gamma.map(Spanned::into_inner),
        reps: raw.reps.into_inner().into_iter().map(Spanned::into_inner).collect(),
        betas: raw
            .betas
            .into_inner()
            .into_iter()
            .map(|b| b.into_inner().into_iter().map(Spanned::into_inner).collect())
            .collect(),
        k: raw.k.into_inner(),
    };
    Ok((file, anchors))
}
