//! `algcode build <family>`.

use algcode::{
    cyclic_code, hamming_code, quasi_cyclic_code, rand_ldpc, CodeFile, EvaluationCode, FieldSpec,
    LinearCode, LocallyRecoverableCode, LrcParams, MultiPoly, UniPoly,
};
use clap::{Args, ValueEnum};

use crate::fail::{Fail, Outcome};
use crate::{parse_vector, Output};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Hamming,
    Cyclic,
    Quasicyclic,
    Ldpc,
    Rs,
    Rm,
    Cartesian,
    Toric,
    Repetition,
    Zerosum,
    Universe,
    Zero,
    Random,
    Lrc,
    Eval,
    Span,
    Graph,
}

/// Family parameters. Lists of vectors separate vectors with `;` and
/// entries with `,`; symbols are decimal reps or rendered elements.
#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(value_enum)]
    family: Family,
    /// Field order.
    #[arg(long)]
    q: Option<u64>,
    /// Hamming redundancy.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Number of variables (Reed-Muller).
    #[arg(long)]
    m: Option<usize>,
    /// Degree bound (rm, cartesian, graph).
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ones per parity check (ldpc).
    #[arg(long)]
    row_weight: Option<usize>,
    /// Locality (lrc).
    #[arg(long)]
    locality: Option<usize>,
    /// Evaluation points: one vector (rs) or a `;`-separated list (eval).
    #[arg(long)]
    points: Option<String>,
    /// Vectors for quasicyclic and span.
    #[arg(long)]
    vectors: Option<String>,
    /// Cartesian factors, e.g. `0,1;0,1,2`.
    #[arg(long)]
    subsets: Option<String>,
    /// Toric exponent rows (integers, may be negative).
    #[arg(long)]
    exponents: Option<String>,
    /// LRC blocks of field elements.
    #[arg(long)]
    blocks: Option<String>,
    /// Cyclic generator polynomial in `x`.
    #[arg(long)]
    poly: Option<String>,
    /// LRC good polynomial in `x`.
    #[arg(long)]
    goodpoly: Option<String>,
    /// `;`-separated polynomials for eval.
    #[arg(long)]
    polys: Option<String>,
    /// 0/1 vertex-edge incidence rows for graph.
    #[arg(long)]
    incidence: Option<String>,
    /// For span: treat the vectors as parity checks.
    #[arg(long)]
    parity_check: bool,
    #[command(flatten)]
    pub output: Output,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: Family) -> Outcome<T> {
    v.clone().ok_or_else(|| {
        Fail::Usage(format!("--{flag} is required for {family:?} codes").to_lowercase())
    })
}

fn parse_rows(field: &FieldSpec, s: &str) -> Outcome<Vec<Vec<u32>>> {
    s.split(';')
        .map(|row| parse_vector(field, row, false))
        .collect()
}

fn parse_int_rows(s: &str) -> Outcome<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Fail::Parse(format!("bad integer `{t}`")))
                })
                .collect()
        })
        .collect()
}

fn parse_poly(field: &FieldSpec, nvars: usize, s: &str) -> Outcome<MultiPoly> {
    MultiPoly::parse(field, nvars, s).map_err(|e| Fail::Parse(format!("bad polynomial `{s}`: {e}")))
}

fn parse_unipoly(field: &FieldSpec, s: &str) -> Outcome<UniPoly> {
    Ok(UniPoly::try_from(&parse_poly(field, 1, s)?)?)
}

pub fn build(a: &BuildArgs) -> Outcome<CodeFile> {
    let fam = a.family;
    if matches!(fam, Family::Ldpc) {
        let code = rand_ldpc(
            need(&a.n, "n", fam)?,
            need(&a.k, "k", fam)?,
            need(&a.row_weight, "row-weight", fam)?,
            a.seed,
        )?;
        return Ok(code.into());
    }
    let q = need(&a.q, "q", fam)?;
    let field = FieldSpec::from_order(q)?;
    let file: CodeFile = match fam {
        Family::Hamming => hamming_code(q, need(&a.r, "r", fam)?)?.into(),
        Family::Rm => {
            EvaluationCode::reed_muller(q, need(&a.m, "m", fam)?, need(&a.degree, "degree", fam)?)?
                .into()
        }
        Family::Cyclic => {
            let g = parse_unipoly(&field, &need(&a.poly, "poly", fam)?)?;
            cyclic_code(&field, &g, need(&a.n, "n", fam)?)?.into()
        }
        Family::Quasicyclic => {
            let rows = parse_rows(&field, &need(&a.vectors, "vectors", fam)?)?;
            quasi_cyclic_code(&field, &rows)?.into()
        }
        Family::Rs => {
            let pts = parse_vector(&field, &need(&a.points, "points", fam)?, false)?;
            EvaluationCode::reed_solomon(&field, &pts, need(&a.k, "k", fam)?)?.into()
        }
        Family::Cartesian => {
            let subsets = parse_rows(&field, &need(&a.subsets, "subsets", fam)?)?;
            EvaluationCode::cartesian(&field, &subsets, need(&a.degree, "degree", fam)?)?.into()
        }
        Family::Toric => {
            let exps = parse_int_rows(&need(&a.exponents, "exponents", fam)?)?;
            EvaluationCode::toric(&field, &exps)?.into()
        }
        Family::Repetition => LinearCode::repetition_code(&field, need(&a.n, "n", fam)?)?.into(),
        Family::Zerosum => LinearCode::zero_sum_code(&field, need(&a.n, "n", fam)?)?.into(),
        Family::Universe => LinearCode::universe_code(&field, need(&a.n, "n", fam)?)?.into(),
        Family::Zero => LinearCode::zero_code(&field, need(&a.n, "n", fam)?)?.into(),
        Family::Random => {
            LinearCode::random(&field, need(&a.n, "n", fam)?, need(&a.k, "k", fam)?, a.seed)?.into()
        }
        Family::Lrc => {
            let params = LrcParams {
                q,
                n: need(&a.n, "n", fam)?,
                k: need(&a.k, "k", fam)?,
                locality: need(&a.locality, "locality", fam)?,
            };
            let blocks = parse_rows(&field, &need(&a.blocks, "blocks", fam)?)?;
            let g = parse_unipoly(&field, &need(&a.goodpoly, "goodpoly", fam)?)?;
            LocallyRecoverableCode::new(params, blocks, g)?.into()
        }
        Family::Eval => {
            let points = parse_rows(&field, &need(&a.points, "points", fam)?)?;
            let m = points[0].len();
            let polys = need(&a.polys, "polys", fam)?
                .split(';')
                .map(|s| parse_poly(&field, m, s))
                .collect::<Outcome<Vec<_>>>()?;
            EvaluationCode::new(&field, points, polys)?.into()
        }
        Family::Span => {
            let rows = parse_rows(&field, &need(&a.vectors, "vectors", fam)?)?;
            let n = match a.n {
                Some(n) => n,
                None => rows[0].len(),
            };
            if a.parity_check {
                LinearCode::from_parity_check_span_with_length(&field, n, &rows)?.into()
            } else {
                LinearCode::from_span_with_length(&field, n, &rows)?.into()
            }
        }
        Family::Graph => {
            let inc = parse_rows(&field, &need(&a.incidence, "incidence", fam)?)?;
            EvaluationCode::graph(&field, &inc, need(&a.degree, "degree", fam)?)?.into()
        }
        Family::Ldpc => unreachable!("built before the field is needed"),
    };
    Ok(file)
}
