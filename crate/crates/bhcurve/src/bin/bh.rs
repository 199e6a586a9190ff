fn main() {
    std::process::exit(bhcurve::cli::run(std::env::args()));
}
