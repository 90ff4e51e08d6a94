//! A fast subset of the invariant suites, runnable from the installed binary.

use exact_real::expr::{parse, random_expr, to_real, ExprShape};
use exact_real::{
    compare, distance_bound, liouville_check, rational, sqrt_pos, to_decimal, Budget, Real,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Suite = (&'static str, fn() -> Check);

pub fn run() -> bool {
    let suites: [Suite; 6] = [
        ("oracle radius and consistency", oracle_consistency),
        ("ring identities", ring_identities),
        ("order of rationals", rational_order),
        ("sqrt(2) digits", sqrt_digits),
        ("liouville checks", liouville_checks),
        ("parse round trip", round_trip),
    ];
    let mut ok = true;
    for (name, suite) in suites {
        match suite() {
            Ok(()) => println!("ok   {name}"),
            Err(detail) => {
                ok = false;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    ok
}

fn random_reals(seed: u64, count: usize) -> Result<Vec<(String, Real)>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = ExprShape {
        max_depth: 4,
        ..ExprShape::default()
    };
    (0..count)
        .map(|_| {
            let e = random_expr(&mut rng, &shape);
            let r = to_real(&e, &Budget::default()).map_err(|err| format!("{e}: {err}"))?;
            Ok((e.to_string(), r))
        })
        .collect()
}

fn oracle_consistency() -> Check {
    let precisions: Vec<_> = (0..=20).step_by(4).map(rational::ten_to_minus).collect();
    for (src, a) in random_reals(1, 100)? {
        let mut answers = Vec::new();
        for eps in &precisions {
            let i = a.approx(eps).map_err(|e| format!("{src}: {e}"))?;
            if i.radius() > eps {
                return Err(format!("{src}: radius {} above {eps}", i.radius()));
            }
            answers.push(i);
        }
        for (k, i) in answers.iter().enumerate() {
            if let Some(j) = answers[..k].iter().find(|j| !i.intersects(j)) {
                return Err(format!("{src}: {i} and {j} are disjoint"));
            }
        }
    }
    Ok(())
}

fn ring_identities() -> Check {
    let reals = random_reals(2, 60)?;
    let eps = rational::ten_to_minus(20);
    let bound = &eps * rational::int(4);
    for t in reals.chunks_exact(3) {
        let (a, b, c) = (&t[0].1, &t[1].1, &t[2].1);
        let pairs = [
            (a.add(b).add(c), a.add(&b.add(c)), "associativity of +"),
            (a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)), "distributivity"),
            (a.mul(b), b.mul(a), "commutativity of *"),
        ];
        for (x, y, law) in pairs {
            let d = distance_bound(&x, &y, &eps).map_err(|e| e.to_string())?;
            if d > bound {
                return Err(format!("{law} for {}, {}, {}", t[0].0, t[1].0, t[2].0));
            }
        }
    }
    Ok(())
}

fn rational_order() -> Check {
    let budget = Budget::decimal(40);
    for k in 1..=30i64 {
        let p = Real::embed(rational::rat(k, k + 1));
        let q = Real::embed(rational::rat(k + 1, k + 2));
        if !compare(&p, &q, &budget)
            .map_err(|e| e.to_string())?
            .is_less()
        {
            return Err(format!("{k}/{} < {}/{} not certified", k + 1, k + 1, k + 2));
        }
    }
    Ok(())
}

fn sqrt_digits() -> Check {
    let budget = Budget::decimal(40);
    let root = sqrt_pos(&Real::from_integer(2), &budget).map_err(|e| e.to_string())?;
    let d = to_decimal(&root, 20, &budget).map_err(|e| e.to_string())?;
    // 1.41421356237309504880|1688...
    match d.digits.as_str() {
        "1.41421356237309504880" => Ok(()),
        other => Err(format!("got {other}")),
    }
}

fn liouville_checks() -> Check {
    for n in 1..=3 {
        let r = liouville_check(n).map_err(|e| e.to_string())?;
        if !r.holds {
            return Err(format!("n = {n}"));
        }
    }
    Ok(())
}

fn round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let e = random_expr(&mut rng, &ExprShape::default());
        let text = e.to_string();
        match parse(&text) {
            Ok(back) if back == e => {}
            _ => return Err(text),
        }
    }
    Ok(())
}
