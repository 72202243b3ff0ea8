use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use shipark_core::enumeration::{central_functions, parking_functions, valid_pairs, words};
use shipark_core::geometry::{label_geometric, pair_of_point, representative_point};
use shipark_core::{
    center, contract, invert, is_central, is_parking, label, label_direct, label_intervals, maxinv,
    opener_table, peel, s_park, GroundSet, ParkingFn, ValidPair, Word,
};

fn grounds(max: usize) -> impl Iterator<Item = GroundSet> {
    (1..=max).map(|n| GroundSet::upto(n).unwrap())
}

fn random_ground(rng: &mut StdRng, m: usize) -> GroundSet {
    let mut pool: Vec<u32> = (1..=2 * m as u32 + 2).collect();
    pool.shuffle(rng);
    let mut chosen = pool[..m].to_vec();
    chosen.sort_unstable();
    GroundSet::new(chosen).unwrap()
}

fn random_parking(rng: &mut StdRng, ground: GroundSet) -> ParkingFn {
    let m = ground.len();
    loop {
        let values: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=m as u32)).collect();
        if is_parking(&ground, &values).unwrap() {
            return ParkingFn::new(ground, values).unwrap();
        }
    }
}

/// The largest subset on which `f` restricts to a central function, by
/// trying all of them.
fn center_brute(f: &ParkingFn) -> Vec<u32> {
    let elems = f.ground().elements();
    let m = elems.len();
    let mut best: Vec<Vec<u32>> = Vec::new();
    let mut best_len = 0;
    for mask in 1u32..(1 << m) {
        let z: Vec<u32> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        let central = z
            .iter()
            .enumerate()
            .all(|(r, &x)| f.value(x).unwrap() as usize <= r + 1);
        if !central {
            continue;
        }
        if z.len() > best_len {
            best_len = z.len();
            best.clear();
        }
        if z.len() == best_len {
            best.push(z);
        }
    }
    assert_eq!(
        best.len(),
        1,
        "largest central subset is not unique for {f}"
    );
    best.pop().unwrap()
}

/// Positions `k < l` with `w_k < w_l` have `f(w_k) < f(w_l)`.
fn increasing_on_ascents(p: &ValidPair, f: &ParkingFn) -> bool {
    let w = p.word().letters();
    (0..w.len()).all(|k| (k + 1..w.len()).all(|l| w[k] > w[l] || f.value(w[k]) < f.value(w[l])))
}

/// Inversions `k < l`, `w_k > w_l` with `f(w_k) > f(w_l)`.
fn decreasing_inversions(p: &ValidPair, f: &ParkingFn) -> usize {
    let w = p.word().letters();
    (0..w.len())
        .map(|k| {
            (k + 1..w.len())
                .filter(|&l| w[k] > w[l] && f.value(w[k]) > f.value(w[l]))
                .count()
        })
        .sum()
}

#[test]
fn s_park_inverts_contract_on_all_words() {
    for g in grounds(7) {
        for w in words(g) {
            let f = contract(&w);
            assert!(is_central(&f), "{w}");
            assert_eq!(s_park(&f).unwrap(), w);
        }
    }
}

#[test]
fn contract_inverts_s_park_on_central_functions() {
    for g in grounds(7) {
        let mut count = 0;
        for f in central_functions(g.clone()) {
            assert_eq!(contract(&s_park(&f).unwrap()), f);
            count += 1;
        }
        assert_eq!(count, (1..=g.len()).product::<usize>());
    }
}

#[test]
fn s_park_round_trips_on_random_grounds() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2000 {
        let m = rng.gen_range(1..=10);
        let g = random_ground(&mut rng, m);
        let mut letters = g.elements().to_vec();
        letters.shuffle(&mut rng);
        let w = Word::new(g, letters).unwrap();
        assert_eq!(s_park(&contract(&w)).unwrap(), w);
    }
}

#[test]
fn central_functions_are_parking() {
    for g in grounds(6) {
        for f in parking_functions(g.clone()) {
            assert!(is_parking(f.ground(), f.values()).unwrap());
        }
        for f in central_functions(g) {
            assert!(is_parking(f.ground(), f.values()).unwrap());
        }
    }
}

#[test]
fn center_matches_brute_force() {
    for g in grounds(6) {
        for f in parking_functions(g) {
            let dec = center(&f);
            assert_eq!(dec.center.elements(), center_brute(&f).as_slice(), "{f}");
            assert!(is_central(&dec.restriction));
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let m = rng.gen_range(1..=8);
        let g = random_ground(&mut rng, m);
        let f = random_parking(&mut rng, g);
        assert_eq!(
            center(&f).center.elements(),
            center_brute(&f).as_slice(),
            "{f}"
        );
    }
}

#[test]
fn labels_agree_monotone_and_parking() {
    for g in grounds(5) {
        for p in valid_pairs(g) {
            let f = label_intervals(&p);
            assert_eq!(label_direct(&p), f, "{p}");
            assert!(is_parking(f.ground(), f.values()).unwrap());
            assert!(increasing_on_ascents(&p, &f), "{p}");
            let o = opener_table(&p);
            assert!(o.as_slice().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn labels_agree_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..3000 {
        let m = rng.gen_range(1..=9);
        let g = random_ground(&mut rng, m);
        let f = random_parking(&mut rng, g);
        let p = invert(&f).unwrap();
        assert_eq!(label_direct(&p), f);
        assert_eq!(label_intervals(&p), f);
        assert!(increasing_on_ascents(&p, &f));
    }
}

/// Labels need not be monotone along inversions: in (231, {[1,3]}) the
/// letter 3 precedes 1 but gets the larger value.
#[test]
fn inversions_can_increase_the_label() {
    let p = ValidPair::new(
        Word::from_letters(vec![2, 3, 1]).unwrap(),
        vec![shipark_core::Interval::new(1, 3)],
    )
    .unwrap();
    let f = label(&p);
    assert_eq!(f.values(), &[1, 1, 2]);
    assert_eq!(decreasing_inversions(&p, &f), 1);
    let worked = ValidPair::new(
        Word::from_letters(vec![8, 4, 3, 9, 6, 7, 1, 2, 5]).unwrap(),
        [(1, 6), (3, 8), (6, 9)]
            .map(shipark_core::Interval::from)
            .to_vec(),
    )
    .unwrap();
    assert!(decreasing_inversions(&worked, &label(&worked)) > 0);
}

#[test]
fn maxinv_pair_labels_to_contraction() {
    for g in grounds(6) {
        for w in words(g) {
            let p = ValidPair::new(w.clone(), maxinv(&w).as_slice().to_vec()).unwrap();
            assert_eq!(label(&p), contract(&w));
        }
    }
}

#[test]
fn invert_round_trips_both_ways() {
    for g in grounds(5) {
        for p in valid_pairs(g.clone()) {
            assert_eq!(invert(&label(&p)).unwrap(), p);
        }
        for f in parking_functions(g) {
            assert_eq!(label(&invert(&f).unwrap()), f);
        }
    }
}

#[test]
fn central_functions_invert_without_peeling() {
    for g in grounds(6) {
        for f in central_functions(g) {
            let w = s_park(&f).unwrap();
            let p = invert(&f).unwrap();
            assert_eq!(p.word(), &w);
            assert_eq!(p.arcs(), &maxinv(&w));
        }
    }
}

#[test]
fn invert_on_random_grounds() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..3000 {
        let m = rng.gen_range(1..=10);
        let g = random_ground(&mut rng, m);
        let f = random_parking(&mut rng, g);
        let p = invert(&f).unwrap();
        assert_eq!(label(&p), f);
        if !is_central(&f) {
            let s = peel(&f).unwrap();
            assert!(s.c >= 2 && s.c <= s.zeta() + 1);
        }
    }
}

#[test]
fn geometric_label_agrees() {
    for n in 1..=4 {
        for p in valid_pairs(GroundSet::upto(n).unwrap()) {
            assert_eq!(label_geometric(&p, n).unwrap(), label_direct(&p), "{p}");
        }
    }
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..500 {
        let n = rng.gen_range(5..=7);
        let f = random_parking(&mut rng, GroundSet::upto(n).unwrap());
        let p = invert(&f).unwrap();
        assert_eq!(label_geometric(&p, n).unwrap(), f);
    }
}

#[test]
fn representative_points_round_trip() {
    for n in 1..=5 {
        for p in valid_pairs(GroundSet::upto(n).unwrap()) {
            let x = representative_point(&p, n).unwrap();
            assert_eq!(pair_of_point(&x).unwrap(), p);
        }
    }
}

/// Crossing one hyperplane away from the base region adds one unit: `e_j`
/// for `x_i = x_j`, `e_i` for `x_i = x_j + 1` (`i < j`).
#[test]
fn single_crossings_step_the_label() {
    use shipark_core::geometry::Rational;
    let one = Rational::from_integer(1);
    for n in 2..=4 {
        let g = GroundSet::upto(n).unwrap();
        let regions: Vec<_> = valid_pairs(g)
            .map(|p| {
                let x = representative_point(&p, n).unwrap();
                (label(&p), x)
            })
            .collect();
        let mut adjacencies = 0;
        for (f, x) in &regions {
            for (f2, y) in &regions {
                let mut crossed = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        let d = |p: &shipark_core::geometry::RationalPoint| p.coord(i) - p.coord(j);
                        let (dx, dy) = (d(x), d(y));
                        let zero = Rational::from_integer(0);
                        // base side: x_i > x_j and x_i − x_j < 1
                        if (dx > zero) != (dy > zero) && dx > zero {
                            crossed.push(j);
                        }
                        if (dx < one) != (dy < one) && dx < one {
                            crossed.push(i);
                        }
                        if (dx > zero) != (dy > zero) && dx < zero {
                            crossed.push(0);
                        }
                        if (dx < one) != (dy < one) && dx > one {
                            crossed.push(0);
                        }
                    }
                }
                if crossed.len() != 1 || crossed[0] == 0 {
                    continue;
                }
                adjacencies += 1;
                let k = crossed[0] as u32;
                for a in 1..=n as u32 {
                    let step = u32::from(a == k);
                    assert_eq!(
                        f2.value(a).unwrap(),
                        f.value(a).unwrap() + step,
                        "{f} -> {f2}"
                    );
                }
            }
        }
        assert!(adjacencies > 0);
    }
}
