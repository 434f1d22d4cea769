#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "rbc/charge_profile.hpp"
#include "rbc/harness.hpp"
#include "rbc/scheduler.hpp"

namespace rbc {

/// Floats in CSV output carry 6 significant digits.
std::string format_g6(double value);

// header: n_receivers,checkpoint_hours,variant,mean_soc,std_soc,dead_frac,full_frac,trials
void write_time_sweep_csv(std::ostream& out,
                          const std::vector<AggregateResult>& rows);

// header: n_receivers,p_t_watts,variant,mean_soc,std_soc,dead_frac,full_frac,trials
void write_power_sweep_csv(std::ostream& out,
                           const std::vector<AggregateResult>& rows);

// header: slot,t_hours,receiver_id,soc,alloc_w,discharge_w
void write_trace_csv(std::ostream& out, const Trace& trace);

// header: t_hours,voltage_v,current_a,power_w,energy_units
void write_profile_csv(std::ostream& out, const ChargeProfile& profile);

/// Writes via `emit`, surfacing I/O failures with the path in the message.
void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& emit);

/// Companion plotting scripts referencing an emitted CSV.
std::string gnuplot_time_sweep(const std::string& csv_path,
                               const std::vector<double>& checkpoints_hours);
std::string gnuplot_power_sweep(const std::string& csv_path,
                                const std::vector<double>& powers_watts);
std::string gnuplot_profile(const std::string& csv_path);
std::string gnuplot_trace(const std::string& csv_path, int n_receivers);

}  // namespace rbc
