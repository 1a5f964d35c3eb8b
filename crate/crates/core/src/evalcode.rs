//! Evaluation codes `C_X(S)`: the image of a polynomial span `S` under
//! evaluation at an ordered point set `X`, plus the Cartesian, Reed–Muller,
//! Reed–Solomon, toric and graph-incidence specializations.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::galois::FieldSpec;
use crate::matrix::MatrixGF;
use crate::multipoly::{
    bm_vanishing_ideal, monomials_of_degree, monomials_up_to, Monomial, MonomialOrder, MultiPoly,
    PointSet, VanishingIdeal,
};

#[derive(Clone, Debug)]
pub struct EvaluationCode {
    points: PointSet,
    polys: Vec<MultiPoly>,
    raw_eval: MatrixGF,
    code: LinearCode,
    vanishing: OnceLock<VanishingIdeal>,
}

impl EvaluationCode {
    /// Evaluates each polynomial at each point. Repeated points are dropped
    /// (first occurrence kept); the code is the row space of the evaluation
    /// matrix.
    pub fn new(field: &FieldSpec, points: Vec<Vec<u32>>, polys: Vec<MultiPoly>) -> Result<Self> {
        let dim = points.first().map(Vec::len).ok_or_else(|| {
            Error::InvalidArgument("evaluation code needs at least one point".into())
        })?;
        let points = PointSet::dedup(field, dim, points)?;
        Self::from_point_set(points, polys)
    }

    pub fn from_point_set(points: PointSet, polys: Vec<MultiPoly>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument(
                "evaluation code needs at least one point".into(),
            ));
        }
        if polys.is_empty() {
            return Err(Error::InvalidArgument(
                "evaluation code needs at least one polynomial".into(),
            ));
        }
        let field = points.field().clone();
        for p in &polys {
            if p.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if p.nvars() != points.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "polynomial in {} variables evaluated at points of dimension {}",
                    p.nvars(),
                    points.dim()
                )));
            }
        }
        let n = points.len();
        let mut data = Vec::with_capacity(polys.len() * n);
        for p in &polys {
            for pt in points.points() {
                data.push(p.eval(pt)?);
            }
        }
        let raw_eval = MatrixGF::new(&field, polys.len(), n, data)?;
        let code = LinearCode::from_generator(raw_eval.clone())?;
        Ok(EvaluationCode {
            points,
            polys,
            raw_eval,
            code,
            vanishing: OnceLock::new(),
        })
    }

    /// Monomial span given as exponent vectors, one monomial per row.
    pub fn from_exponents(
        field: &FieldSpec,
        points: Vec<Vec<u32>>,
        exponents: &[Vec<u32>],
    ) -> Result<Self> {
        let polys = exponents
            .iter()
            .map(|e| MultiPoly::monomial(field, Monomial::new(e.clone())))
            .collect();
        Self::new(field, points, polys)
    }

    /// Cartesian code on `A_1 x ... x A_m`: all monomials of total degree
    /// `<= degree` with the exponent of `x_i` capped at `|A_i| - 1`.
    pub fn cartesian(field: &FieldSpec, subsets: &[Vec<u32>], degree: u32) -> Result<Self> {
        let points = grid(field, subsets)?;
        let caps: Vec<u32> = subsets.iter().map(|s| s.len() as u32 - 1).collect();
        let polys = monomials_up_to(subsets.len(), degree, Some(&caps))
            .into_iter()
            .map(|m| MultiPoly::monomial(field, m))
            .collect();
        Self::from_point_set(points, polys)
    }

    /// Cartesian grid with an explicit polynomial list.
    pub fn cartesian_with_polys(
        field: &FieldSpec,
        subsets: &[Vec<u32>],
        polys: Vec<MultiPoly>,
    ) -> Result<Self> {
        Self::from_point_set(grid(field, subsets)?, polys)
    }

    /// Generalized Reed–Muller code `RM_q(d, m)`: the Cartesian code on all
    /// of `GF(q)^m`, points in rep order.
    pub fn reed_muller(q: u64, m: usize, degree: u32) -> Result<Self> {
        let field = FieldSpec::from_order(q)?;
        if m == 0 {
            return Err(Error::InvalidArgument(
                "Reed-Muller code needs m >= 1".into(),
            ));
        }
        let all: Vec<u32> = (0..field.q()).collect();
        Self::cartesian(&field, &vec![all; m], degree)
    }

    /// Reed–Solomon code: evaluations of `1, x, ..., x^(k-1)` at `points`.
    pub fn reed_solomon(field: &FieldSpec, points: &[u32], k: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        if let Some(&dup) = points.iter().find(|&&x| !seen.insert(x)) {
            return Err(Error::InvalidArgument(format!(
                "duplicate evaluation point {dup}"
            )));
        }
        if k == 0 || k > points.len() {
            return Err(Error::InvalidArgument(format!(
                "Reed-Solomon dimension {k} outside 1..={}",
                points.len()
            )));
        }
        let pts = PointSet::new(field, 1, points.iter().map(|&x| vec![x]).collect())?;
        let polys = (0..k as u32)
            .map(|i| MultiPoly::monomial(field, Monomial::new(vec![i])))
            .collect();
        Self::from_point_set(pts, polys)
    }

    /// Toric code: monomials `x^u` for each row `u` of `exponents`, evaluated
    /// on the torus `(F^*)^m` in lexicographic rep order. Exponents are
    /// reduced mod `q - 1`.
    pub fn toric(field: &FieldSpec, exponents: &[Vec<i64>]) -> Result<Self> {
        let m = exponents.first().map(Vec::len).ok_or_else(|| {
            Error::InvalidArgument("toric code needs at least one exponent vector".into())
        })?;
        if m == 0 {
            return Err(Error::InvalidArgument("toric code needs m >= 1".into()));
        }
        if field.q() == 2 {
            log::warn!("toric code over GF(2): the torus is a single point");
        }
        let order = (field.q() - 1) as i64;
        let mut polys = Vec::with_capacity(exponents.len());
        for row in exponents {
            if row.len() != m {
                return Err(Error::DimensionMismatch("ragged exponent matrix".into()));
            }
            let e = row.iter().map(|&u| u.rem_euclid(order) as u32).collect();
            polys.push(MultiPoly::monomial(field, Monomial::new(e)));
        }
        let nonzero: Vec<u32> = (1..field.q()).collect();
        let points = grid(field, &vec![nonzero; m])?;
        Self::from_point_set(points, polys)
    }

    /// Graph code: the rows of the vertex-edge incidence matrix are the
    /// points (duplicates dropped), and `S` is every monomial of total degree
    /// exactly `degree` in one variable per edge.
    pub fn graph(field: &FieldSpec, incidence: &[Vec<u32>], degree: u32) -> Result<Self> {
        let edges = incidence.first().map(Vec::len).unwrap_or(0);
        if edges == 0 {
            return Err(Error::InvalidArgument("empty incidence matrix".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidArgument(
                "graph code degree must be at least 1".into(),
            ));
        }
        if incidence.iter().flatten().any(|&x| x > 1) {
            return Err(Error::InvalidArgument(
                "incidence entries must be 0 or 1".into(),
            ));
        }
        let polys = monomials_of_degree(edges, degree, None)
            .into_iter()
            .map(|m| MultiPoly::monomial(field, m))
            .collect();
        Self::new(field, incidence.to_vec(), polys)
    }

    pub fn field(&self) -> &FieldSpec {
        self.points.field()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn polynomials(&self) -> &[MultiPoly] {
        &self.polys
    }

    /// Row `i` is the evaluation vector of the `i`-th polynomial.
    pub fn raw_eval(&self) -> &MatrixGF {
        &self.raw_eval
    }

    pub fn linear_code(&self) -> &LinearCode {
        &self.code
    }

    /// Vanishing ideal of the points under grlex, computed on first use.
    pub fn vanishing_ideal(&self) -> &VanishingIdeal {
        self.vanishing.get_or_init(|| {
            bm_vanishing_ideal(&self.points, MonomialOrder::GrLex)
                .expect("point set is nonempty and duplicate-free")
        })
    }

    pub fn vanishing_ideal_with(&self, order: MonomialOrder) -> VanishingIdeal {
        bm_vanishing_ideal(&self.points, order).expect("point set is nonempty and duplicate-free")
    }

    /// `sum_i coeffs[i] * S_i`.
    pub fn combination(&self, coeffs: &[u32]) -> Result<MultiPoly> {
        if coeffs.len() != self.polys.len() {
            return Err(Error::DimensionMismatch(
                "one coefficient per polynomial".into(),
            ));
        }
        let mut acc = MultiPoly::zero(self.field(), self.points.dim());
        for (p, &c) in self.polys.iter().zip(coeffs) {
            acc = acc.add(&p.scale(c)?)?;
        }
        Ok(acc)
    }
}

/// Row-major Cartesian product (last coordinate varies fastest).
fn grid(field: &FieldSpec, subsets: &[Vec<u32>]) -> Result<PointSet> {
    if subsets.is_empty() {
        return Err(Error::InvalidArgument(
            "need at least one coordinate set".into(),
        ));
    }
    for (i, s) in subsets.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "coordinate set {i} is empty"
            )));
        }
        let mut seen = HashSet::new();
        for &x in s {
            field.check(x)?;
            if !seen.insert(x) {
                return Err(Error::InvalidArgument(format!(
                    "coordinate set {i} repeats element {x}"
                )));
            }
        }
    }
    let mut points = vec![Vec::new()];
    for s in subsets {
        points = points
            .into_iter()
            .flat_map(|p| {
                s.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    PointSet::new(field, subsets.len(), points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn sample_points(f4: &FieldSpec) -> Vec<Vec<u32>> {
        let a = f4.generator();
        vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 1],
            vec![a, a, a],
        ]
    }

    #[test]
    fn gf4_session() {
        let f4 = gf(4);
        let polys = ["x+y+z", "a+y*z^2", "z^2", "x+y+z+z^2"]
            .iter()
            .map(|s| MultiPoly::parse(&f4, 3, s).unwrap())
            .collect();
        let c = EvaluationCode::new(&f4, sample_points(&f4), polys).unwrap();
        assert_eq!(c.linear_code().length(), 6);
        assert_eq!(c.linear_code().dimension(), 3);
        assert_eq!(c.raw_eval().row(0), &[0, 1, 1, 1, 1, f4.generator()]);
        assert_eq!(c.points().len(), 6);
        let vi = c.vanishing_ideal();
        assert_eq!(vi.standard_monomials.len(), 6);
    }

    #[test]
    fn constant_span_is_repetition() {
        let f4 = gf(4);
        let one = MultiPoly::constant(&f4, 3, 1).unwrap();
        let c = EvaluationCode::new(&f4, sample_points(&f4), vec![one]).unwrap();
        assert_eq!(
            c.linear_code(),
            &LinearCode::repetition_code(&f4, 6).unwrap()
        );
    }

    #[test]
    fn duplicate_points_dropped() {
        let f3 = gf(3);
        let x = MultiPoly::parse(&f3, 1, "x").unwrap();
        let c = EvaluationCode::new(&f3, vec![vec![1], vec![2], vec![1]], vec![x]).unwrap();
        assert_eq!(c.linear_code().length(), 2);
    }

    #[test]
    fn construction_errors() {
        let f3 = gf(3);
        let x = MultiPoly::parse(&f3, 1, "x").unwrap();
        assert!(EvaluationCode::new(&f3, vec![], vec![x.clone()]).is_err());
        assert!(EvaluationCode::new(&f3, vec![vec![1]], vec![]).is_err());
        assert!(EvaluationCode::new(&f3, vec![vec![1, 2]], vec![x]).is_err());
        assert!(EvaluationCode::cartesian(&f3, &[vec![]], 1).is_err());
        assert!(EvaluationCode::cartesian(&f3, &[vec![1, 1]], 1).is_err());
        assert!(EvaluationCode::reed_solomon(&f3, &[1, 1], 1).is_err());
        assert!(EvaluationCode::reed_solomon(&f3, &[1, 2], 3).is_err());
        assert!(EvaluationCode::reed_solomon(&f3, &[1, 2], 0).is_err());
        assert!(EvaluationCode::reed_muller(6, 1, 1).is_err());
        assert!(EvaluationCode::graph(&f3, &[], 1).is_err());
    }

    #[test]
    fn cartesian_examples() {
        let f3 = gf(3);
        let c = EvaluationCode::cartesian(&f3, &[vec![0, 1], vec![0, 1]], 1).unwrap();
        let lc = c.linear_code();
        assert_eq!((lc.length(), lc.dimension()), (4, 3));
        // brute-force over all 27 messages
        let brute = (0..27u32)
            .map(|i| lc.encode(&[i / 9, (i / 3) % 3, i % 3]).unwrap())
            .filter(|w| w.iter().any(|&x| x != 0))
            .map(|w| w.iter().filter(|&&x| x != 0).count())
            .min()
            .unwrap();
        // an affine function vanishing on three corners of the square is zero
        assert_eq!(brute, 2);
        assert_eq!(lc.minimum_weight().unwrap(), brute);
        let rep = EvaluationCode::cartesian(&f3, &[vec![0, 1], vec![0, 1, 2]], 0).unwrap();
        assert_eq!(
            rep.linear_code(),
            &LinearCode::repetition_code(&f3, 6).unwrap()
        );
        let full = EvaluationCode::cartesian(&f3, &[vec![0, 1, 2], vec![0, 1, 2]], 2).unwrap();
        let rm = EvaluationCode::reed_muller(3, 2, 2).unwrap();
        assert_eq!(full.linear_code(), rm.linear_code());
    }

    #[test]
    fn reed_muller_examples() {
        let rm = EvaluationCode::reed_muller(2, 3, 1).unwrap();
        let lc = rm.linear_code();
        assert_eq!(
            (lc.length(), lc.dimension(), lc.minimum_weight().unwrap()),
            (8, 4, 4)
        );
        let rm0 = EvaluationCode::reed_muller(2, 2, 0).unwrap();
        assert_eq!(
            rm0.linear_code(),
            &LinearCode::repetition_code(&gf(2), 4).unwrap()
        );
        let rm31 = EvaluationCode::reed_muller(3, 1, 1).unwrap();
        let lc = rm31.linear_code();
        assert_eq!(
            (lc.length(), lc.dimension(), lc.minimum_weight().unwrap()),
            (3, 2, 2)
        );
    }

    #[test]
    fn reed_solomon_examples() {
        let f5 = gf(5);
        let rs = EvaluationCode::reed_solomon(&f5, &[1, 2, 3], 3).unwrap();
        assert_eq!(
            rs.raw_eval().to_rows(),
            vec![vec![1, 1, 1], vec![1, 2, 3], vec![1, 4, 4]]
        );
        let rs1 = EvaluationCode::reed_solomon(&f5, &[1, 2, 3], 1).unwrap();
        assert_eq!(
            rs1.linear_code(),
            &LinearCode::repetition_code(&f5, 3).unwrap()
        );
        let f7 = gf(7);
        let rs = EvaluationCode::reed_solomon(&f7, &[1, 2, 3, 4, 5, 6], 3).unwrap();
        assert_eq!(rs.linear_code().minimum_weight().unwrap(), 4);
    }

    #[test]
    fn toric_examples() {
        let f3 = gf(3);
        let t = EvaluationCode::toric(&f3, &[vec![0]]).unwrap();
        assert_eq!(
            t.linear_code(),
            &LinearCode::repetition_code(&f3, 2).unwrap()
        );
        let t = EvaluationCode::toric(&f3, &[vec![0], vec![1]]).unwrap();
        assert_eq!(t.raw_eval().to_rows(), vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(t.linear_code(), &LinearCode::universe_code(&f3, 2).unwrap());
        let f5 = gf(5);
        let t = EvaluationCode::toric(&f5, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let lc = t.linear_code();
        assert_eq!((lc.length(), lc.dimension()), (16, 3));
        assert_eq!(lc.minimum_weight().unwrap(), 12);
        // shifting an exponent row by q - 1 leaves the code unchanged
        let shifted = EvaluationCode::toric(&f5, &[vec![0, 0], vec![5, 0], vec![0, -3]]).unwrap();
        assert_eq!(shifted.linear_code(), lc);
    }

    #[test]
    fn graph_examples() {
        let f2 = gf(2);
        let path = EvaluationCode::graph(&f2, &[vec![1], vec![1]], 1).unwrap();
        assert_eq!(path.linear_code().length(), 1);
        assert_eq!(path.linear_code().dimension(), 1);
        let triangle = [vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let g = EvaluationCode::graph(&f2, &triangle, 1).unwrap();
        assert_eq!(g.polynomials().len(), 3);
        let lc = g.linear_code();
        // the three incidence rows sum to zero over GF(2)
        assert_eq!((lc.length(), lc.dimension()), (3, 2));
        assert_eq!(lc.codewords().unwrap().len(), 4);
    }
}
