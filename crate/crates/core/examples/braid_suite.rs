//! Run the built-in braid identity suite.
use twistlab::braid::suite::verify_braid_suite;

fn main() {
    let r = verify_braid_suite(None);
    print!("{}", r.to_text());
    std::process::exit(if r.passed() { 0 } else { 1 });
}
