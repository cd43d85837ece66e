use std::process::ExitCode;

fn main() -> ExitCode {
    cdgraph_cli::app::main()
}
