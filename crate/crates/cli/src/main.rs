use std::io::Write;

fn main() {
    let profile = std::env::var(sfpack_cli::PROFILE_ENV).ok();
    let out = sfpack_cli::run(std::env::args_os(), &mut std::io::stdin().lock(), profile.as_deref());
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    std::io::stderr().write_all(out.stderr.as_bytes()).ok();
    std::process::exit(out.code);
}
