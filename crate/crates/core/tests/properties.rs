use algcode::lrc::check_block_values;
use algcode::{
    bm_vanishing_ideal, CodeFile, EvaluationCode, FieldSpec, LinearCode, LocallyRecoverableCode,
    LrcParams, MatrixGF, MonomialOrder, MultiPoly, PointSet, SyndromeTable, UniPoly,
};
use proptest::prelude::*;

const ORDERS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

fn field_and_elems(count: usize) -> impl Strategy<Value = (FieldSpec, Vec<u32>)> {
    prop::sample::select(ORDERS).prop_flat_map(move |q| {
        let f = FieldSpec::from_order(q).unwrap();
        (Just(f), prop::collection::vec(0..q as u32, count))
    })
}

fn matrix() -> impl Strategy<Value = MatrixGF> {
    (
        prop::sample::select(&[2u64, 3, 4, 5, 9][..]),
        1usize..6,
        1usize..7,
    )
        .prop_flat_map(|(q, r, c)| {
            prop::collection::vec(0..q as u32, r * c).prop_map(move |data| {
                let f = FieldSpec::from_order(q).unwrap();
                MatrixGF::new(&f, r, c, data).unwrap()
            })
        })
}

/// Random `[n, k]` code with q ≤ 9, n ≤ 8 and q^k small enough to enumerate.
fn small_code() -> impl Strategy<Value = LinearCode> {
    (
        prop::sample::select(&[2u64, 3, 4, 5, 7, 8, 9][..]),
        1usize..=8,
        any::<u64>(),
    )
        .prop_flat_map(|(q, n, seed)| {
            let max_k = (1..=n)
                .filter(|&k| q.pow(k as u32) <= 1 << 14)
                .max()
                .unwrap_or(1);
            (1..=max_k).prop_map(move |k| {
                LinearCode::random(&FieldSpec::from_order(q).unwrap(), n, k, seed).unwrap()
            })
        })
}

fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

proptest! {
    #[test]
    fn field_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, f.q() as i64 - 1), 1);
            prop_assert_eq!(f.mul(f.div(b, a).unwrap(), a), b);
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn render_parse_round_trip((f, v) in field_and_elems(1)) {
        prop_assert_eq!(f.parse_element(&f.render(v[0])).unwrap(), v[0]);
    }

    #[test]
    fn rank_nullity(a in matrix()) {
        let rank = a.rank();
        prop_assert_eq!(rank, a.transpose().rank());
        let k = a.nullspace_basis();
        prop_assert_eq!(k.nrows() + rank, a.ncols());
        prop_assert!(a.mul(&k.transpose()).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.nrows());
        prop_assert!(a.row_space_eq(&a.row_basis()).unwrap());
    }

    #[test]
    fn matrix_text_round_trip(a in matrix()) {
        prop_assert_eq!(MatrixGF::from_text(a.field(), &a.to_text()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn code_structure(c in small_code()) {
        let (n, k) = (c.length(), c.dimension());
        prop_assert!(c.generator_matrix().mul(c.parity_check_matrix()).unwrap().is_zero());
        prop_assert_eq!(c.generator_matrix().rank(), k);
        prop_assert_eq!(c.parity_check_matrix().rank(), n - k);
        let d = c.dual();
        prop_assert_eq!(d.dimension(), n - k);
        prop_assert_eq!(&d.dual(), &c);
        let dmin = c.minimum_weight().unwrap();
        prop_assert!(dmin <= n - k + 1);
        for w in c.codewords().unwrap() {
            prop_assert!(c.contains(&w).unwrap());
        }
    }

    #[test]
    fn shorten_laws(c in small_code(), pos in any::<prop::sample::Index>()) {
        prop_assume!(c.length() >= 2);
        let i = pos.index(c.length());
        let s = c.shorten(&[i]).unwrap();
        prop_assert_eq!(s.length(), c.length() - 1);
        let k = c.dimension();
        prop_assert!(s.dimension() == k || s.dimension() + 1 == k);
        // every shortened codeword extends, with a zero at i, to a codeword
        for w in s.codewords().unwrap() {
            let mut full = w.clone();
            full.insert(i, 0);
            prop_assert!(c.contains(&full).unwrap());
        }
    }

    #[test]
    fn file_round_trip(c in small_code()) {
        let text = CodeFile::from(c.clone()).to_text();
        let back = CodeFile::parse(&text).unwrap();
        prop_assert_eq!(back.code(), &c);
        prop_assert_eq!(back.code().generator_matrix(), c.generator_matrix());
    }

    #[test]
    fn decode_agrees_with_nearest_codeword(
        q in prop::sample::select(&[2u64, 3][..]),
        n in 2usize..=8,
        k in 1usize..=4,
        seed in any::<u64>(),
        raw in prop::collection::vec(0u32..3, 8),
    ) {
        prop_assume!(k <= n);
        let f = FieldSpec::from_order(q).unwrap();
        let c = LinearCode::random(&f, n, k, seed).unwrap();
        let v: Vec<u32> = raw[..n].iter().map(|&x| x % q as u32).collect();
        let d = c.minimum_weight().unwrap();
        let table = SyndromeTable::new(&c, d).unwrap();
        for (s, e) in table.entries() {
            prop_assert_eq!(c.syndrome(e).unwrap(), s.to_vec());
            prop_assert!(weight(e) <= table.t());
        }
        let words = c.codewords().unwrap();
        let dist = |w: &[u32]| v.iter().zip(w).filter(|(a, b)| a != b).count();
        let best = words.iter().map(|w| dist(w)).min().unwrap();
        if let Ok(out) = table.decode(&v) {
            prop_assert!(c.contains(&out).unwrap());
            prop_assert_eq!(dist(&out), best);
        } else {
            prop_assert!(best > table.t());
        }
    }

    #[test]
    fn vanishing_ideal_laws(
        q in prop::sample::select(&[2u64, 3, 4, 5][..]),
        m in 1usize..=3,
        raw in prop::collection::vec(prop::collection::vec(0u32..5, 3), 1..=10),
    ) {
        let f = FieldSpec::from_order(q).unwrap();
        let pts: Vec<Vec<u32>> = raw.iter().map(|p| p[..m].iter().map(|&x| x % q as u32).collect()).collect();
        let ps = PointSet::dedup(&f, m, pts).unwrap();
        for order in [MonomialOrder::GrLex, MonomialOrder::Lex] {
            let vi = bm_vanishing_ideal(&ps, order).unwrap();
            prop_assert_eq!(vi.standard_monomials.len(), ps.len());
            for g in &vi.basis {
                for p in ps.points() {
                    prop_assert_eq!(g.eval(p).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn evaluation_kernel_law(
        q in prop::sample::select(&[2u64, 3, 4][..]),
        m in 1usize..=3,
        raw in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..=10),
        degree in 1u32..=3,
        coeffs in prop::collection::vec(0u32..4, 64),
    ) {
        let f = FieldSpec::from_order(q).unwrap();
        let pts: Vec<Vec<u32>> = raw.iter().map(|p| p[..m].iter().map(|&x| x % q as u32).collect()).collect();
        let monos = algcode::multipoly::monomials_up_to(m, degree, None);
        let polys: Vec<MultiPoly> = monos.into_iter().map(|mo| MultiPoly::monomial(&f, mo)).collect();
        let ev = EvaluationCode::new(&f, pts, polys).unwrap();
        let lc = ev.linear_code();
        prop_assert_eq!(lc.dimension(), ev.raw_eval().rank());
        prop_assert!(lc.dimension() <= ev.points().len());
        let c: Vec<u32> = coeffs[..ev.polynomials().len()].iter().map(|&x| x % q as u32).collect();
        let word = ev.raw_eval().vecmat(&c).unwrap();
        let poly = ev.combination(&c).unwrap();
        prop_assert_eq!(word.iter().all(|&x| x == 0), ev.vanishing_ideal().reduce(&poly).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lrc_restriction_lemma(msg in prop::collection::vec(0u32..13, 3), pos in 0usize..12) {
        let f = FieldSpec::new(13, 1).unwrap();
        let blocks = vec![vec![1, 5, 8, 12], vec![2, 10, 3, 11], vec![4, 7, 6, 9]];
        let params = LrcParams { q: 13, n: 12, k: 3, locality: 3 };
        let c = LocallyRecoverableCode::new(params, blocks.clone(), UniPoly::monomial(&f, 4)).unwrap();
        let word = c.linear_code().encode(&msg).unwrap();
        for (b, block) in blocks.iter().enumerate() {
            let vals: Vec<u32> = c.block_positions(b).iter().map(|&p| word[p]).collect();
            prop_assert!(check_block_values(&f, block, &vals).is_ok());
        }
        let mut damaged = word.clone();
        damaged[pos] = (damaged[pos] + 1) % 13;
        prop_assert_eq!(c.local_recover(&damaged, pos).unwrap(), word[pos]);
    }
}
