use proptest::prelude::*;

use rsk_toggle::classical_rsk::{classical_pipeline, glue, gt_pattern, rsk_insert};
use rsk_toggle::greene_kleitman::{
    gk_value, longest_increasing_subsequence, verify_gk, DEFAULT_PATH_CAP,
};
use rsk_toggle::hook_series::{
    check_weight_formula, hook_length, rpp_gf, rpp_gf_brute, syt_count_by_hooks, ContentWeights,
    Rational, SeriesCaps,
};
use rsk_toggle::octahedron::{
    build_all, build_u, check_octahedron, extract_rpp, restriction_mismatches,
};
use rsk_toggle::toggle_rsk::{
    insert_corner, remove_corner, toggle, toggle_rsk, toggle_rsk_inverse, ToggleContext,
};
use rsk_toggle::verify::{
    diag_rect_holds, oracle_agrees, random_linear_extension, transpose_commutes,
};
use rsk_toggle::{Cell, NTableau, Partition};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn filling(shape: Partition, max_entry: u64) -> impl Strategy<Value = NTableau> {
    let n = shape.size();
    prop::collection::vec(0..=max_entry, n)
        .prop_map(move |values| NTableau::from_reading_word(shape.clone(), &values).unwrap())
}

fn tableau(max_rows: usize, max_part: usize, max_entry: u64) -> impl Strategy<Value = NTableau> {
    partition(max_rows, max_part).prop_flat_map(move |shape| filling(shape, max_entry))
}

fn square(max_n: usize, max_entry: u64) -> impl Strategy<Value = NTableau> {
    (1..=max_n).prop_flat_map(move |n| filling(Partition::square(n), max_entry))
}

fn rpp(max_rows: usize, max_part: usize) -> impl Strategy<Value = NTableau> {
    tableau(max_rows, max_part, 4).prop_map(|t| toggle_rsk(&t, None).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugate_is_an_involution(shape in partition(6, 6)) {
        prop_assert_eq!(shape.conjugate().conjugate(), shape.clone());
        prop_assert_eq!(shape.conjugate().size(), shape.size());
    }

    #[test]
    fn corners_are_distinct_part_ends(shape in partition(6, 6)) {
        let mut distinct = shape.parts().to_vec();
        distinct.dedup();
        let corners = shape.corner_boxes();
        prop_assert_eq!(corners.len(), distinct.len());
        let border = shape.border_boxes();
        for c in &corners {
            prop_assert!(border.contains(c));
            prop_assert!(shape.without_box(*c).is_ok());
        }
    }

    #[test]
    fn hooks_are_arm_plus_leg_plus_one(shape in partition(6, 6)) {
        for cell in shape.cells() {
            let h = shape.hook_cells(cell).len();
            prop_assert_eq!(h, shape.arm(cell) + shape.leg(cell) + 1);
            prop_assert_eq!(h, hook_length(&shape, cell));
        }
    }

    #[test]
    fn linear_extensions_counted_by_hooks(shape in partition(4, 4).prop_filter("small", |p| p.size() <= 9)) {
        let count = shape.linear_extensions(12).unwrap().count();
        prop_assert_eq!(BigInt::from(count), BigInt::from(syt_count_by_hooks(&shape)));
    }

    #[test]
    fn rect_at_border_boxes_of_rpp_input(t in tableau(5, 5, 3)) {
        for cell in t.shape().border_boxes() {
            prop_assert!(t.rect_sum(cell).is_ok());
        }
        prop_assert_eq!(t.transpose().transpose(), t.clone());
    }

    #[test]
    fn diag_sum_is_transpose_invariant(t in tableau(5, 5, 3)) {
        let tt = t.transpose();
        for cell in t.shape().cells() {
            prop_assert_eq!(t.diag_sum(cell).unwrap(), tt.diag_sum(cell.transposed()).unwrap());
        }
    }

    #[test]
    fn classical_rsk_shapes_and_types(a in square(4, 3)) {
        let n = a.shape().num_rows();
        let (p, q) = rsk_insert(&a).unwrap();
        prop_assert_eq!(p.shape(), q.shape());
        // type of P counts column sums, type of Q counts row sums
        let col_sums: Vec<usize> = a.col_sums().unwrap().into_iter().map(|v| v as usize).collect();
        let row_sums: Vec<usize> = a.row_sums().unwrap().into_iter().map(|v| v as usize).collect();
        prop_assert_eq!(p.type_vector(), col_sums);
        prop_assert_eq!(q.type_vector(), row_sums);
        let gp = gt_pattern(&p, n).unwrap();
        let gq = gt_pattern(&q, n).unwrap();
        let hat = glue(&gp, &gq).unwrap();
        prop_assert!(hat.is_rpp());
    }

    #[test]
    fn transposed_matrix_swaps_p_and_q(a in square(4, 3)) {
        let direct = classical_pipeline(&a).unwrap();
        let swapped = classical_pipeline(&a.transpose()).unwrap();
        prop_assert_eq!(direct.p, swapped.q);
        prop_assert_eq!(direct.q, swapped.p);
    }

    #[test]
    fn toggle_rsk_gives_rpp_of_same_shape(t in tableau(5, 5, 3)) {
        let hat = toggle_rsk(&t, None).unwrap();
        prop_assert_eq!(hat.shape(), t.shape());
        prop_assert!(hat.is_rpp());
    }

    #[test]
    fn order_independence(t in tableau(4, 4, 3), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = random_linear_extension(&mut rng, t.shape());
        prop_assert_eq!(toggle_rsk(&t, Some(&order)).unwrap(), toggle_rsk(&t, None).unwrap());
    }

    #[test]
    fn forward_then_inverse(t in tableau(5, 5, 3)) {
        let hat = toggle_rsk(&t, None).unwrap();
        prop_assert_eq!(toggle_rsk_inverse(&hat).unwrap(), t);
    }

    #[test]
    fn inverse_then_forward(t_hat in rpp(5, 5)) {
        let pre = toggle_rsk_inverse(&t_hat).unwrap();
        prop_assert_eq!(toggle_rsk(&pre, None).unwrap(), t_hat);
    }

    #[test]
    fn corner_insertion_and_removal(t_hat in rpp(4, 4), x in 0u64..6) {
        let shape = t_hat.shape();
        let addable: Vec<Cell> = (1..=shape.num_rows() + 1)
            .map(|r| Cell::new(r, shape.row_len(r) + 1))
            .filter(|&c| shape.is_addable(c))
            .collect();
        for cell in addable {
            let grown = insert_corner(&t_hat, cell, x).unwrap();
            prop_assert!(grown.is_rpp());
            prop_assert_eq!(remove_corner(&grown, cell).unwrap(), (t_hat.clone(), x));
        }
    }

    #[test]
    fn toggle_is_an_involution_on_its_interval(lower in 0u64..10, width in 0u64..10, offset in 0u64..10) {
        let upper = lower + width;
        let beta = lower + offset.min(width);
        let once = toggle(beta, lower, upper);
        prop_assert!(lower <= once && once <= upper);
        prop_assert_eq!(toggle(once, lower, upper), beta);
    }

    #[test]
    fn contexts_in_rpps_are_admissible(t_hat in rpp(4, 4)) {
        let shape = t_hat.shape();
        for r in 1..=shape.num_rows() + 1 {
            let cell = Cell::new(r, shape.row_len(r) + 1);
            if shape.is_addable(cell) {
                let ctx = ToggleContext::read(&t_hat, cell);
                prop_assert!(ctx.is_admissible());
            }
        }
    }

    #[test]
    fn diag_rect_identity(t in tableau(5, 5, 3)) {
        prop_assert!(diag_rect_holds(&t).unwrap());
    }

    #[test]
    fn transpose_equivariance(t in tableau(5, 5, 3)) {
        prop_assert!(transpose_commutes(&t).unwrap());
    }

    #[test]
    fn oracle_on_squares(a in square(5, 3)) {
        prop_assert!(oracle_agrees(&a).unwrap());
    }

    #[test]
    fn octahedron_and_extraction(t in tableau(4, 4, 3)) {
        let (u, ubar, utilde) = build_all(&t).unwrap();
        prop_assert!(check_octahedron(&utilde, &t).unwrap().is_empty());
        prop_assert_eq!(extract_rpp(&u, t.shape()).unwrap(), toggle_rsk(&t, None).unwrap());
        prop_assert!(u.iter().all(|(_, v)| v >= 0));
        for ((i, j, k), v) in ubar.iter() {
            if let Some(prev) = ubar.get(i, j, k - 1) {
                prop_assert!(prev <= v);
            }
        }
    }

    #[test]
    fn restriction_compatibility(t in tableau(4, 4, 3)) {
        let u = build_u(&t).unwrap();
        for corner in t.shape().corner_boxes() {
            let smaller = t.without_box(corner).unwrap();
            prop_assert!(restriction_mismatches(&build_u(&smaller).unwrap(), &u).is_empty());
        }
    }

    #[test]
    fn greene_kleitman(t in tableau(3, 3, 3)) {
        prop_assert!(verify_gk(&t, DEFAULT_PATH_CAP).unwrap().is_empty());
    }

    #[test]
    fn weight_formula_with_unit_and_random_weights(t in tableau(4, 4, 3), nums in prop::collection::vec(1i64..6, 8)) {
        prop_assert!(check_weight_formula(&t, &ContentWeights::ones(t.shape())).unwrap());
        let shape = t.shape();
        let low = 1 - shape.num_rows() as i64;
        let weights = (low..shape.num_cols() as i64)
            .map(|c| (c, Rational::new(BigInt::from(nums[(c - low) as usize]), BigInt::from(2))))
            .collect();
        let w = ContentWeights::for_shape(shape, weights).unwrap();
        prop_assert!(check_weight_formula(&t, &w).unwrap());
    }

    #[test]
    fn hook_product_matches_enumeration(shape in partition(3, 3).prop_filter("small", |p| p.size() <= 5)) {
        let caps = SeriesCaps { max_boxes: 5, max_degree: 24 };
        prop_assert_eq!(rpp_gf(&shape, 7, caps).unwrap(), rpp_gf_brute(&shape, 7, caps).unwrap());
    }
}

fn permutation_matrix(perm: &[usize]) -> NTableau {
    let n = perm.len();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| u64::from(perm[i] == j)).collect())
        .collect();
    NTableau::new(Partition::square(n), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Exploratory: for a permutation matrix the single-path maximum at the
    // far corner, the corner of Â and the first row of P all measure the
    // longest increasing subsequence of the permutation read row by row.
    #[test]
    fn permutation_corner_is_lis(perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = permutation_matrix(&perm);
        let n = perm.len();
        let lis = longest_increasing_subsequence(&perm) as u64;
        let corner = Cell::new(n, n);
        prop_assert_eq!(gk_value(&a, corner, 1, DEFAULT_PATH_CAP).unwrap(), lis);
        prop_assert_eq!(toggle_rsk(&a, None).unwrap().entry(corner).unwrap(), lis);
        let (p, _) = rsk_insert(&a).unwrap();
        prop_assert_eq!(p.shape().parts()[0] as u64, lis);
    }
}
