mod common;

use std::fs;

use common::*;
use dirac_wigner::archive::{load_field, save_field, write_csv, Field, HEADER_LEN};
use dirac_wigner::wigner::{cross_wigner, w0_transform};
use dirac_wigner::Error;

#[test]
fn files_round_trip_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let g = default_grid();
    let mut r = rng(51);
    let psi = random_spinor(&g, &mut r);
    let fields = [
        Field::from(psi.clone()),
        Field::from(w0_transform(&psi).unwrap()),
        Field::from(cross_wigner(&psi, &random_spinor(&g, &mut r)).unwrap()),
    ];
    for (i, f) in fields.into_iter().enumerate() {
        let path = dir.path().join(format!("f{i}.dpsf"));
        save_field(&f, &path).unwrap();
        let back = load_field(&path).unwrap();
        assert_eq!(back.kind(), f.kind());
        assert_eq!(back, f);
    }
}

#[test]
fn wigner_archive_size() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.dpsf");
    let g = default_grid();
    save_field(&w0_transform(&random_spinor(&g, &mut rng(52))).unwrap().into(), &path).unwrap();
    assert_eq!(fs::metadata(&path).unwrap().len() as usize, HEADER_LEN + 512 * 512 * 8);
}

#[test]
fn corrupt_files_are_reported_distinctly() {
    let dir = tempfile::tempdir().unwrap();
    let g = dirac_wigner::build_grid(-4.0, 4.0, 16).unwrap();
    let path = dir.path().join("s.dpsf");
    save_field(&random_spinor(&g, &mut rng(53)).into(), &path).unwrap();
    let good = fs::read(&path).unwrap();

    let write = |name: &str, bytes: &[u8]| {
        let p = dir.path().join(name);
        fs::write(&p, bytes).unwrap();
        load_field(&p)
    };

    let mut magic = good.clone();
    magic[0] = b'X';
    assert!(matches!(write("magic", &magic), Err(Error::BadMagic { .. })));
    assert!(matches!(write("short", &good[..good.len() - 8]), Err(Error::Truncated(_))));
    assert!(matches!(write("header", &good[..20]), Err(Error::Truncated(_))));
    let mut long = good.clone();
    long.extend_from_slice(&[0u8; 16]);
    assert!(matches!(write("long", &long), Err(Error::DimensionMismatch { .. })));
    let mut kind = good.clone();
    kind[8] = 9;
    assert!(matches!(write("kind", &kind), Err(Error::UnknownKind(9))));
    assert!(matches!(load_field(dir.path().join("missing")), Err(Error::Io(_))));
    assert!(matches!(load_field(&path).unwrap().into_wigner(), Err(Error::KindMismatch { .. })));
}

#[test]
fn csv_has_one_row_per_lattice_point() {
    let dir = tempfile::tempdir().unwrap();
    let g = dirac_wigner::build_grid(-4.0, 4.0, 16).unwrap();
    let psi = random_spinor(&g, &mut rng(54));
    let w = w0_transform(&psi).unwrap();

    let wp = dir.path().join("w.csv");
    write_csv(&w.into(), &wp).unwrap();
    let text = fs::read_to_string(&wp).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,p,w"));
    assert_eq!(lines.count(), 16 * 16);

    let sp = dir.path().join("s.csv");
    write_csv(&psi.into(), &sp).unwrap();
    let text = fs::read_to_string(&sp).unwrap();
    assert_eq!(text.lines().next(), Some("x,re1,im1,re2,im2,re3,im3,re4,im4"));
    assert_eq!(text.lines().count(), 17);
}
