// The command-line interface driven in-process.

use garside::cli::run;

pub fn run_example() {
    for args in [
        &["garside", "normal", "A2", "1211"][..],
        &["garside", "good", "H3", "--d", "10", "--count"],
        &["garside", "slide", "A3", "123", "--d", "4"],
        &["garside", "poset-check", "A2", "121"],
    ] {
        let o = run(args);
        println!("$ {}\n{}", args[1..].join(" "), o.stdout);
        assert_eq!(o.code, 0);
    }
    assert_eq!(run(["garside", "normal", "A2", "1211"]).stdout, "121 . 1\n");
    assert_eq!(run(["garside", "normal", "A2", "13"]).code, 2);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
