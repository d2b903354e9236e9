// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

fn main() {
    let (code, out) = cyclide_cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{out}");
    std::process::exit(code);
}
