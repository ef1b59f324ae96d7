use std::io::{self, Write};

use overlap::pipeline::StageTimings;
use overlap::{gen, Analysis};

use crate::render::millis;

/// Mean set size of the generated instances.
const MEAN_SET_SIZE: usize = 8;

/// One random family per target `|F|`: `m = target / 8` sets of mean size
/// 8 over `n = target / 4` elements. Repetitions sweep all sizes in turn and
/// each size reports its median run, so a burst of background noise (or a
/// lucky quiet spell) does not land on a single doubling.
pub fn run(targets: &[usize], seed: u64, reps: usize, out: &mut impl Write) -> io::Result<()> {
    write!(out, "total_size,n,m")?;
    for name in StageTimings::NAMES {
        write!(out, ",{name}_ms")?;
    }
    writeln!(out, ",total_ms,ratio")?;

    let families = targets
        .iter()
        .enumerate()
        .map(|(i, &target)| {
            let n = target / 4;
            let density = MEAN_SET_SIZE as f64 / n as f64;
            gen::random(n, target / MEAN_SET_SIZE, density, seed.wrapping_add(i as u64))
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))
        })
        .collect::<io::Result<Vec<_>>>()?;

    let mut runs: Vec<Vec<StageTimings>> = vec![Vec::new(); families.len()];
    for _ in 0..reps.max(1) {
        for (f, slot) in families.iter().zip(&mut runs) {
            slot.push(Analysis::run(f).timings);
        }
    }

    let mut previous: Option<f64> = None;
    for (f, mut ts) in families.iter().zip(runs) {
        ts.sort_by_key(StageTimings::total);
        let t = ts[ts.len() / 2];
        write!(out, "{},{},{}", f.total_size(), f.n(), f.m())?;
        for d in t.as_array() {
            write!(out, ",{:.3}", millis(d))?;
        }
        let total = millis(t.total());
        write!(out, ",{total:.3},")?;
        if let Some(p) = previous {
            write!(out, "{:.3}", total / p)?;
        }
        writeln!(out)?;
        previous = Some(total);
    }
    Ok(())
}
