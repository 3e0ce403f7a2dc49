fn main() {
    std::process::exit(commuting_graph::cli::run());
}
