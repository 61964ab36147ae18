//! Checks the published residue class whose non-prime-power members have
//! prime-power length exactly 3.

use gadic::plength::{
    plength_upper, sun_class_member, verify_sun_example, Caps, SunConstants, SunExample,
};

fn main() -> gadic::Result<()> {
    let report = verify_sun_example(&SunExample::default());
    print!("{report}");

    let c = SunConstants::published();
    let x = &c.m + &c.n * 2u32;
    println!("\nmember: {}", sun_class_member(&x));
    println!("{}", plength_upper(&x, &Caps::default())?);

    // The misprinted modulus from an older printing fails the value check.
    let mut old = SunExample::default();
    old.constants.n = "66483034025018711639862527490".parse().unwrap();
    let report = verify_sun_example(&old);
    println!(
        "\nold modulus: value check passes = {}",
        report.check("value").unwrap().passed
    );
    Ok(())
}
