fn main() {
    std::process::exit(osp_cohomology::cli::run());
}
