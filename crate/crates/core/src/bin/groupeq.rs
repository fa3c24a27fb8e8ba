use clap::Parser;
use groupeq::cli::{run, Args};

fn main() {
    let args = Args::parse();
    let outcome = run(&args);
    if args.trace {
        for line in &outcome.trace {
            eprintln!("{line}");
        }
    }
    print!("{}", outcome.render());
    std::process::exit(outcome.code);
}
