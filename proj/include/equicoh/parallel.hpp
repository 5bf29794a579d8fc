#pragma once

namespace equicoh {

/* Execution mode for the data-parallel kernels (dimension tables, rank
 * sweeps, per-flag deductions).  Serial runs the reference loops; Parallel
 * dispatches the OpenMP variants when the build has OpenMP, and otherwise
 * falls back to the reference loops.  Results are required to be identical
 * in both modes. */
enum class ExecMode { Serial, Parallel };

void set_exec_mode(ExecMode mode);
ExecMode exec_mode();

/* Number of worker threads the Parallel mode uses (OpenMP default when 0). */
void set_thread_count(int n);
int thread_count();

}  // namespace equicoh
