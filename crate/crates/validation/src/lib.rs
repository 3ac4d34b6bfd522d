//! Holds the acceptance target (`cargo test -p iwk-validation`); it prints
//! one PASS/FAIL line per criterion.
