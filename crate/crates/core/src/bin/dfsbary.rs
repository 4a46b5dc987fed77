fn main() {
    std::process::exit(dfs_bary::cli::run(std::env::args_os()));
}
