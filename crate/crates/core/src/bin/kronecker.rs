fn main() {
    std::process::exit(kronecker_frobenius::cli::main());
}
