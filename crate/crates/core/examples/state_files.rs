//! The JSON state file: a Bell state converted between density, Stokes and
//! DWF form, as the `dwf convert` command does.

use dwfkit::cli::{convert, Representation, StateFile};

const BELL: &str = r#"{
  "representation": "density",
  "n": 2,
  "data": {
    "re": [[0.5,0,0,0.5],[0,0,0,0],[0,0,0,0],[0.5,0,0,0.5]],
    "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]
  }
}"#;

fn main() -> dwfkit::Result<()> {
    let density = StateFile::from_json(BELL)?;
    let stokes = convert(&density, Representation::Stokes, None)?;
    let dwf = convert(&stokes, Representation::Dwf, Some(0))?;
    println!("{}", stokes.to_json()?);
    println!("{}", dwf.to_json()?);

    let other = convert(&dwf, Representation::Dwf, Some(513))?;
    let back = convert(&other, Representation::Density, None)?;
    println!("density after dwf(net 0) -> dwf(net 513) -> density:");
    println!("{}", back.to_json()?);
    Ok(())
}
