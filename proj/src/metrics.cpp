#include "baassim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "baassim/errors.hpp"

namespace baassim {

std::int64_t starved_count(const std::vector<TaskRecord>& records, TimeMs threshold_ms) {
    if (threshold_ms < 0) {
        throw SimError("starved_count: threshold must be >= 0");
    }
    std::int64_t count = 0;
    for (const TaskRecord& r : records) {
        if (r.wait_ms() > threshold_ms) {
            ++count;
        }
    }
    return count;
}

double load_cov(const std::vector<TimeMs>& per_vm_busy_ms) {
    if (per_vm_busy_ms.empty()) {
        throw SimError("load_cov: empty busy-time list");
    }
    __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (const TimeMs busy : per_vm_busy_ms) {
        sum += busy;
        sum_sq += static_cast<unsigned __int128>(busy) * static_cast<unsigned __int128>(busy);
    }
    if (sum <= 0) {
        throw SimError("load_cov: mean busy time must be > 0");
    }
    // Population variance over mean^2, kept exact in integers:
    //   cov^2 = (n * sum(x^2) - sum(x)^2) / sum(x)^2
    const auto n = static_cast<unsigned __int128>(per_vm_busy_ms.size());
    const unsigned __int128 numerator =
        n * sum_sq - static_cast<unsigned __int128>(sum) * static_cast<unsigned __int128>(sum);
    const long double cov =
        sqrtl(static_cast<long double>(numerator)) / static_cast<long double>(sum);
    return static_cast<double>(cov);
}

MetricsReport compute_report(const std::vector<TaskRecord>& records,
                             const std::vector<TimeMs>& per_vm_busy_ms, PolicyId policy,
                             TimeMs starvation_threshold_ms) {
    if (records.empty()) {
        throw SimError("compute_report: no task records");
    }
    MetricsReport report;
    report.policy = policy;
    report.n_tasks = static_cast<std::int64_t>(records.size());
    TimeMs min_arrival = records.front().arrival_ms;
    TimeMs max_finish = records.front().finish_ms;
    for (const TaskRecord& r : records) {
        report.total_wait_ms += r.wait_ms();
        report.max_wait_ms = std::max(report.max_wait_ms, r.wait_ms());
        min_arrival = std::min(min_arrival, r.arrival_ms);
        max_finish = std::max(max_finish, r.finish_ms);
    }
    report.makespan_ms = max_finish - min_arrival;
    report.load_cov = load_cov(per_vm_busy_ms);
    report.starved_count = starved_count(records, starvation_threshold_ms);
    report.per_vm_busy_ms = per_vm_busy_ms;
    return report;
}

std::string format_milli3(std::int64_t thousandths) {
    std::ostringstream os;
    if (thousandths < 0) {
        os << '-';
        thousandths = -thousandths;
    }
    os << thousandths / 1000 << '.' << std::setw(3) << std::setfill('0') << thousandths % 1000;
    return os.str();
}

std::string format_fixed3(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0) {
        throw SimError("format_fixed3: denominator must be > 0");
    }
    if (numerator < 0) {
        throw SimError("format_fixed3: negative values not supported");
    }
    // round-half-up of (numerator * 1000 / denominator):
    //   floor((2 * numerator * 1000 + denominator) / (2 * denominator))
    const __int128 scaled = static_cast<__int128>(numerator) * 1000;
    const __int128 thousandths =
        (2 * scaled + static_cast<__int128>(denominator)) / (2 * static_cast<__int128>(denominator));
    return format_milli3(static_cast<std::int64_t>(thousandths));
}

namespace {

std::int64_t cov_thousandths(double cov) {
    // llround rounds halfway cases away from zero, which is half-up for the
    // nonnegative values here.
    return static_cast<std::int64_t>(std::llround(cov * 1000.0));
}

}  // namespace

void write_task_csv(std::ostream& out, const std::vector<TaskRecord>& records) {
    out << "cloudlet_id,user_id,vm_id,priority,length_mi,arrival_ms,start_ms,finish_ms,"
           "wait_ms,turnaround_ms\n";
    for (const TaskRecord& r : records) {
        out << r.cloudlet_id << ',' << r.user_id << ',' << r.vm_id << ',' << r.priority << ','
            << r.length_mi << ',' << r.arrival_ms << ',' << r.start_ms << ',' << r.finish_ms << ','
            << r.wait_ms() << ',' << r.turnaround_ms() << '\n';
    }
}

void write_comparison_csv(std::ostream& out, const std::vector<MetricsReport>& reports) {
    out << "policy,n_tasks,avg_wait_ms,max_wait_ms,makespan_ms,load_cov,starved_count\n";
    for (const MetricsReport& r : reports) {
        const std::string avg =
            r.n_tasks == 0 ? format_milli3(0) : format_fixed3(r.total_wait_ms, r.n_tasks);
        out << policy_name(r.policy) << ',' << r.n_tasks << ',' << avg << ',' << r.max_wait_ms
            << ',' << r.makespan_ms << ',' << format_milli3(cov_thousandths(r.load_cov)) << ','
            << r.starved_count << '\n';
    }
}

}  // namespace baassim
