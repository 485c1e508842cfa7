fn main() {
    let (report, code) = cherednik::cli::run(std::env::args_os());
    if code == cherednik::cli::EXIT_USAGE && report.format == cherednik::cli::Format::Text {
        eprint!("{}", report.render());
    } else {
        print!("{}", report.render());
    }
    std::process::exit(code);
}
