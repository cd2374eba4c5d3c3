//! Cross-module property tests: algebraic identities, oracle agreements, and
//! geometric soundness checks at randomized inputs.

use num::{BigRational, One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bott_samelson::column::all_columns;
use bott_samelson::coxeter::{
    contains_reduced_expression, demazure_product, max_e, max_e_bruteforce, w_max,
};
use bott_samelson::geometry::{
    build_chart, flag_position, hypersurface_chain, plucker_minor,
    sample_gamma_point, sample_point, sample_richardson, GalleryPoint,
};
use bott_samelson::perm::all_permutations;
use bott_samelson::positroid::{positroid_columns, RichardsonDescriptor};
use bott_samelson::tableaux::{
    enumerate_standard, is_standard, is_w0_standard, optimal_lifting, optimal_lifting_w0_test,
    Shape,
};
use bott_samelson::{Column, Permutation, SubwordIndexSet, Word};

fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> Word {
    let letters = (0..len).map(|_| rng.gen_range(1..n)).collect();
    Word::new(letters, n).unwrap()
}

#[test]
fn demazure_fold_splits_at_every_cut() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..300 {
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, 4, len);
        let total = w_max(&w);
        for j in 0..=w.len() {
            let head = w_max(&w.prefix(j));
            let tail = w_max(&w.range(j + 1, w.len()));
            assert_eq!(demazure_product(&head, &tail).unwrap(), total);
        }
    }
}

#[test]
fn reduced_containment_matches_subword_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let s4 = all_permutations(4);
    for _ in 0..60 {
        let len = rng.gen_range(0..=8);
        let word = random_word(&mut rng, 4, len);
        for w in &s4 {
            // brute force: try every index subset of matching size
            let need = w.length();
            let r = word.len();
            let mut found = false;
            'mask: for mask in 0u32..(1 << r) {
                if mask.count_ones() as usize != need {
                    continue;
                }
                let mut acc = Permutation::identity(4);
                for j in 0..r {
                    if mask & (1 << j) != 0 {
                        let next = acc.right_mul_simple(word.letter(j + 1));
                        if next.length() != acc.length() + 1 {
                            continue 'mask;
                        }
                        acc = next;
                    }
                }
                if acc == *w {
                    found = true;
                    break;
                }
            }
            assert_eq!(
                contains_reduced_expression(&word, w).unwrap(),
                found,
                "word {word}, target {w}"
            );
        }
    }
}

#[test]
fn max_e_oracle_agreement_s5() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let s5 = all_permutations(5);
    for _ in 0..200 {
        let w = s5.choose(&mut rng).unwrap();
        let i = rng.gen_range(1..5);
        let kappa = all_columns(i, 5).choose(&mut rng).unwrap().clone();
        assert_eq!(
            max_e(w, &kappa).unwrap().value,
            max_e_bruteforce(w, &kappa).unwrap(),
            "w={w}, κ={kappa}"
        );
    }
}

#[test]
fn lifting_witnesses_revalidate() {
    let word = Word::parse("1,2,1,2", 3).unwrap();
    let shape = Shape::new(word, vec![1, 2, 0, 1]).unwrap();
    for t in bott_samelson::tableaux::enumerate_tableaux(&shape, 100_000).unwrap() {
        if let Some(lifting) = is_standard(&t) {
            lifting.validate(&t).unwrap();
            let opt = optimal_lifting(&t).unwrap();
            opt.lifting.validate(&t).unwrap();
        }
        if let Some(lifting) = is_w0_standard(&t) {
            lifting.validate(&t).unwrap();
            let w0 = Permutation::longest(3);
            for j in lifting.chain() {
                let sub = t.shape().word().subword(j);
                assert!(contains_reduced_expression(&sub, &w0).unwrap());
            }
        }
    }
}

#[test]
fn monotone_slot_consistency() {
    // within one position, witnessed chains have weakly decreasing truncations
    let word = Word::parse("1,2,1", 3).unwrap();
    let shape = Shape::new(word, vec![1, 2, 2]).unwrap();
    for t in enumerate_standard(&shape, 100_000).unwrap() {
        let lifting = is_standard(&t).unwrap();
        let slots = t.shape().slots();
        for idx in 1..slots.len() {
            let (k, m) = slots[idx];
            if m == 1 {
                continue;
            }
            let cur = truncated_product(&t, &lifting.chain()[idx], k);
            let prev = truncated_product(&t, &lifting.chain()[idx - 1], k);
            assert!(cur.bruhat_leq(&prev).unwrap());
        }
    }
}

fn truncated_product(
    t: &bott_samelson::tableaux::Tableau,
    j: &SubwordIndexSet,
    k: usize,
) -> Permutation {
    let sub = t.shape().word().subword(&j.restrict(k));
    bott_samelson::coxeter::word_product(&sub)
}

#[test]
fn optimal_w0_test_matches_exhaustive_search() {
    let word = Word::parse("2,1,2,1", 3).unwrap();
    let shape = Shape::new(word, vec![1, 1, 1, 1]).unwrap();
    for t in enumerate_standard(&shape, 100_000).unwrap() {
        assert_eq!(
            optimal_lifting_w0_test(&t).unwrap(),
            is_w0_standard(&t).is_some(),
            "divergence at {t}"
        );
    }
}

#[test]
fn chart_positions_track_sigma() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for (n, letters) in [(3, "1,2,1,2,1,2"), (4, "1,2,3,2,1,2,3,1,2"), (4, "3,2,1,3,2,3")] {
        let word = Word::parse(letters, n).unwrap();
        let chart = build_chart(&word, &vec![1; word.len()]).unwrap();
        for _ in 0..200 {
            let p = sample_point(&chart, &mut rng, 50).unwrap();
            for j in 1..=chart.r() {
                let (direct, _) = flag_position(p.b(j)).unwrap();
                assert_eq!(direct, chart.sigma()[j], "slot {j} of {letters}");
            }
        }
    }
}

#[test]
fn minors_are_affine_per_coordinate() {
    // freeze all but one coordinate: every slot minor lies on a line
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let word = Word::parse("1,2,1,2,1,2", 3).unwrap();
    let chart = build_chart(&word, &vec![1; 6]).unwrap();
    for _ in 0..10 {
        let base: Vec<BigRational> = (0..6)
            .map(|_| BigRational::from_integer(rng.gen_range(-20i64..=20).into()))
            .collect();
        for j in 0..6 {
            let step = BigRational::from_integer(rng.gen_range(1i64..=5).into());
            let points: Vec<GalleryPoint> = (0..3)
                .map(|k| {
                    let mut c = base.clone();
                    c[j] += BigRational::from_integer(k.into()) * &step;
                    GalleryPoint::from_coords(&chart, c).unwrap()
                })
                .collect();
            for k in 1..=6 {
                let i_k = chart.word().letter(k);
                for kappa in all_columns(i_k, 3) {
                    let vals: Vec<BigRational> = points
                        .iter()
                        .map(|p| {
                            plucker_minor(p.b(k), &kappa, &Column::fundamental(i_k, 3)).unwrap()
                        })
                        .collect();
                    let second_difference = &vals[0] - &vals[1] - &vals[1] + &vals[2];
                    assert!(
                        second_difference.is_zero(),
                        "coordinate {j} not affine in slot {k}, κ={kappa}"
                    );
                }
            }
        }
    }
}

#[test]
fn final_matrix_antidiagonal_form() {
    // wherever the word folds to w0, B_r is unitriangular against the
    // antidiagonal at every point of the chart
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for (n, letters) in [(3, "1,2,1"), (3, "1,2,1,2,1,2"), (4, "1,2,3,2,1,2,3,1,2"), (4, "3,2,1,3,2,3,3,2,1,3")] {
        let word = Word::parse(letters, n).unwrap();
        let chart = build_chart(&word, &vec![1; word.len()]).unwrap();
        for _ in 0..20 {
            let p = sample_point(&chart, &mut rng, 100).unwrap();
            let b = p.b_last();
            for i in 1..=n {
                for j in 1..=n {
                    if i + j == n + 1 {
                        let u = b.at(i, j).clone();
                        assert!(u == BigRational::one() || u == -BigRational::one());
                    } else if i + j > n + 1 {
                        assert!(b.at(i, j).is_zero(), "({i},{j}) below the antidiagonal");
                    }
                }
            }
        }
    }
}

#[test]
fn linear_parts_match_root_registry() {
    // the x_k-coefficient of the (i, j) entry of B_r at the origin is 1
    // exactly when σ_{k-1} maps β_k to (i, n+1-j)
    for (n, letters) in [(3, "1,2,1,2,1,2"), (4, "1,2,3,2,1,2,3,1,2")] {
        let word = Word::parse(letters, n).unwrap();
        let chart = build_chart(&word, &vec![1; word.len()]).unwrap();
        let origin =
            GalleryPoint::from_coords(&chart, vec![BigRational::zero(); chart.r()]).unwrap();
        for k in 1..=chart.r() {
            let (a, b) = chart.beta()[k - 1];
            let sig = &chart.sigma()[k - 1];
            let target = (sig.image(a), sig.image(b));
            let mut coords = vec![BigRational::zero(); chart.r()];
            coords[k - 1] = BigRational::from_integer(5.into());
            let moved = GalleryPoint::from_coords(&chart, coords).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let slope = moved.b_last().at(i, j) - origin.b_last().at(i, j);
                    let expected = if (i, n + 1 - j) == target {
                        BigRational::from_integer(5.into())
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(slope, expected, "x_{k} in entry ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn gamma_points_satisfy_all_chain_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for (n, letters) in [(3, "1,2,1,2,1,2"), (4, "3,2,1,3,2,3,3,2,1,3")] {
        let word = Word::parse(letters, n).unwrap();
        let chart = build_chart(&word, &vec![1; word.len()]).unwrap();
        let chain = hypersurface_chain(n, &word).unwrap();
        for _ in 0..5 {
            let p = sample_gamma_point(&chart, &chain, &mut rng, 1000).unwrap();
            for step in chain.steps() {
                let m = p
                    .b(step.l)
                    .minor(&step.kappa, &Column::fundamental(step.b, n))
                    .unwrap();
                assert!(m.is_zero(), "p_κ at slot l nonzero for κ={}", step.kappa);
            }
            let (direct, _) = flag_position(p.b_last()).unwrap();
            assert_eq!(direct, Permutation::longest(n));
        }
    }
}

#[test]
fn positroid_membership_matches_sampling() {
    let n = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let perms = all_permutations(n);
    for v in &perms {
        for w in &perms {
            if !v.bruhat_leq(w).unwrap() {
                continue;
            }
            let rd = RichardsonDescriptor::new(v.clone(), w.clone()).unwrap();
            let samples: Vec<_> = (0..20)
                .map(|_| sample_richardson(v, w, &mut rng, 50).unwrap())
                .collect();
            for i in 1..n {
                let members = positroid_columns(&rd, i).unwrap();
                for kappa in all_columns(i, n) {
                    let survives = samples.iter().any(|b| {
                        !plucker_minor(b, &kappa, &Column::fundamental(i, n))
                            .unwrap()
                            .is_zero()
                    });
                    assert_eq!(
                        members.contains(&kappa),
                        survives,
                        "v={v}, w={w}, κ={kappa}"
                    );
                }
            }
        }
    }
}

#[test]
fn richardson_samples_respect_interval_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let perms = all_permutations(4);
    for _ in 0..30 {
        let v = perms.choose(&mut rng).unwrap();
        let w = perms.choose(&mut rng).unwrap();
        if !v.bruhat_leq(w).unwrap() {
            continue;
        }
        let b = sample_richardson(v, w, &mut rng, 50).unwrap();
        let (direct, opposite) = flag_position(&b).unwrap();
        assert!(direct.bruhat_leq(w).unwrap());
        assert!(v.bruhat_leq(&opposite).unwrap());
    }
}
