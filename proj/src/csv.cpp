#include "rbc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include "rbc/errors.hpp"

namespace rbc {

std::string format_g6(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

void write_time_sweep_csv(std::ostream& out,
                          const std::vector<AggregateResult>& rows) {
    out << "n_receivers,checkpoint_hours,variant,mean_soc,std_soc,dead_frac,"
           "full_frac,trials\n";
    for (const auto& row : rows) {
        out << row.n_receivers << ',' << format_g6(row.checkpoint_hours) << ','
            << variant_name(row.variant) << ',' << format_g6(row.mean_soc) << ','
            << format_g6(row.std_soc) << ',' << format_g6(row.dead_frac) << ','
            << format_g6(row.full_frac) << ',' << row.trials << '\n';
    }
}

void write_power_sweep_csv(std::ostream& out,
                           const std::vector<AggregateResult>& rows) {
    out << "n_receivers,p_t_watts,variant,mean_soc,std_soc,dead_frac,"
           "full_frac,trials\n";
    for (const auto& row : rows) {
        out << row.n_receivers << ',' << format_g6(row.transmit_power_w) << ','
            << variant_name(row.variant) << ',' << format_g6(row.mean_soc) << ','
            << format_g6(row.std_soc) << ',' << format_g6(row.dead_frac) << ','
            << format_g6(row.full_frac) << ',' << row.trials << '\n';
    }
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << "slot,t_hours,receiver_id,soc,alloc_w,discharge_w\n";
    const double slot_hours = trace.slot_seconds / 3600.0;
    for (std::size_t s = 0; s < trace.slots.size(); ++s) {
        const auto& record = trace.slots[s];
        const double t = static_cast<double>(s + 1) * slot_hours;
        for (std::size_t r = 0; r < record.soc.size(); ++r) {
            out << (s + 1) << ',' << format_g6(t) << ',' << (r + 1) << ','
                << format_g6(record.soc[r]) << ',' << format_g6(record.allocation[r])
                << ',' << format_g6(record.discharge[r]) << '\n';
        }
    }
}

void write_profile_csv(std::ostream& out, const ChargeProfile& profile) {
    out << "t_hours,voltage_v,current_a,power_w,energy_units\n";
    const auto energy = profile_energy(profile);
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const auto& s = profile.samples[i];
        out << format_g6(s.time_hours) << ',' << format_g6(s.voltage) << ','
            << format_g6(s.current) << ',' << format_g6(s.voltage * s.current)
            << ',' << format_g6(energy[i].second) << '\n';
    }
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& emit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    emit(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

// One curve per value of the second CSV column.
std::string sweep_plot_script(const std::string& csv_path,
                              const std::vector<double>& series,
                              const std::string& unit) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set xlabel 'receivers'\n";
    s += "set ylabel 'mean SOC'\n";
    s += "set yrange [0:1]\n";
    s += "plot ";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::string value = format_g6(series[i]);
        if (i > 0) s += ", \\\n     ";
        s += (i == 0 ? "'" + csv_path + "'" : "''");
        s += " using 1:($2==" + value + "?$4:1/0) with linespoints title '" +
             value + " " + unit + "'";
    }
    s += "\n";
    return s;
}

}  // namespace

std::string gnuplot_time_sweep(const std::string& csv_path,
                               const std::vector<double>& checkpoints_hours) {
    return sweep_plot_script(csv_path, checkpoints_hours, "h");
}

std::string gnuplot_power_sweep(const std::string& csv_path,
                                const std::vector<double>& powers_watts) {
    return sweep_plot_script(csv_path, powers_watts, "W");
}

std::string gnuplot_trace(const std::string& csv_path, int n_receivers) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set xlabel 'time (h)'\n";
    s += "set ylabel 'SOC'\n";
    s += "set yrange [0:1]\n";
    s += "plot for [r=1:" + std::to_string(n_receivers) + "] '" + csv_path +
         "' using 2:($3==r?$4:1/0) with lines title 'receiver '.r\n";
    return s;
}

std::string gnuplot_profile(const std::string& csv_path) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set key autotitle columnhead\n";
    s += "set xlabel 'time (h)'\n";
    s += "plot '" + csv_path + "' using 1:2 with lines title 'voltage (V)', '" +
         csv_path + "' using 1:3 with lines title 'current (A)', '" + csv_path +
         "' using 1:4 with lines title 'power (W)'\n";
    return s;
}

}  // namespace rbc
