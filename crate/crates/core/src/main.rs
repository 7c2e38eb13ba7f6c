fn main() {
    std::process::exit(tautcalc::cli::main_entry());
}
