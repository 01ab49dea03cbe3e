//! Job specifications and the runner behind the `qasl` binary.

mod run;
mod spec;

pub use run::{
    deliver, error_json, exit_code, run, CertifyOut, DegenerateOut, GkOut, GorensteinOut,
    GrassVerify, HilbertOut, LatticeAnalysis, NfOut, Outcome, RealizationDto, SelftestLine,
    TorusImage, TorusOut,
};
pub use spec::{parse_jobspec, Command, Format, Job, JobSpec, MAX_N};
