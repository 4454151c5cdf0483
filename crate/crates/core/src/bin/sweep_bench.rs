use nilspec::bundled::{extended_algebra, extended_generator, ExampleId, ALL_EXAMPLES};
use nilspec::deformation::{exp_derivation, trig_inverse};
use nilspec::laplacian::constancy_report_with_inverse;

fn main() {
    for id in ALL_EXAMPLES {
        let g = extended_algebra(id);
        let d = extended_generator(id);
        let phi = exp_derivation(&d).unwrap();
        let inv = trig_inverse(&phi).unwrap();
        let t0 = std::time::Instant::now();
        let mut n_const = 0;
        for a1 in -2i64..=2 {
            for a2 in -2i64..=2 {
                for a3 in -2i64..=2 {
                    for a4 in -2i64..=2 {
                        let rep = constancy_report_with_inverse(&g, &inv, &[a1, a2, a3, a4]).unwrap();
                        if rep.constant { n_const += 1; }
                    }
                }
            }
        }
        println!("example {id}: {n_const} constant tuples of 625, {:?}", t0.elapsed());
    }
}
