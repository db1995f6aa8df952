use schubert::complex::{build_complex, FlaggedMap};
use schubert::functor::build_functor_image;
use schubert::perm::Permutation;

fn main() {
    let mut rank_ok = true;
    for w in Permutation::all(4) {
        if build_functor_image(&w).is_err() {
            rank_ok = false;
            println!("RANK FAIL: w={w}");
        }
    }
    let mut dd_fail = 0;
    for w in Permutation::all(4) {
        match build_complex(&w, &FlaggedMap::generic(4)) {
            Ok(c) => {
                if !c.verify_dd_zero() {
                    dd_fail += 1;
                }
            }
            Err(e) => {
                dd_fail += 1;
                println!("BUILD ERR: w={w}: {e}");
            }
        }
    }
    println!("rank_ok={rank_ok} dd_fail={dd_fail}");
}
