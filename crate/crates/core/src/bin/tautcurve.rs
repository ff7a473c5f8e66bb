fn main() {
    tautcurve::cli::main()
}
