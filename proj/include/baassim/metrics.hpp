#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "baassim/policies.hpp"
#include "baassim/types.hpp"

namespace baassim {

struct TaskRecord {
    CloudletId cloudlet_id = 0;
    UserId user_id = 0;
    VmId vm_id = 0;
    int priority = 0;
    std::int64_t length_mi = 1;
    TimeMs arrival_ms = 0;
    TimeMs start_ms = 0;
    TimeMs finish_ms = 0;

    TimeMs wait_ms() const { return start_ms - arrival_ms; }
    TimeMs turnaround_ms() const { return finish_ms - arrival_ms; }

    bool operator==(const TaskRecord&) const = default;
};

/// Per-policy aggregate. The average wait is kept as an exact integer sum and
/// only rounded (half up, three decimals) when formatted; floating point
/// enters the artifact solely through load_cov.
struct MetricsReport {
    PolicyId policy = PolicyId::Fcfs;
    std::int64_t n_tasks = 0;
    std::int64_t total_wait_ms = 0;
    TimeMs max_wait_ms = 0;
    TimeMs makespan_ms = 0;  // max finish - min arrival
    double load_cov = 0.0;
    std::int64_t starved_count = 0;
    std::vector<TimeMs> per_vm_busy_ms;

    double avg_wait_ms() const {
        return n_tasks == 0 ? 0.0 : static_cast<double>(total_wait_ms) / static_cast<double>(n_tasks);
    }
};

MetricsReport compute_report(const std::vector<TaskRecord>& records,
                             const std::vector<TimeMs>& per_vm_busy_ms, PolicyId policy,
                             TimeMs starvation_threshold_ms);

/// Population standard deviation over mean of the per-VM busy times.
/// Throws SimError for an empty list or zero mean.
double load_cov(const std::vector<TimeMs>& per_vm_busy_ms);

/// Number of records with wait_ms strictly above the threshold.
std::int64_t starved_count(const std::vector<TaskRecord>& records, TimeMs threshold_ms);

/// numerator/denominator rendered with exactly three decimals, round half up.
/// Exact integer arithmetic; denominator must be positive.
std::string format_fixed3(std::int64_t numerator, std::int64_t denominator);

/// thousandths -> "w.fff" (e.g. 12500 -> "12.500").
std::string format_milli3(std::int64_t thousandths);

/// Per-task CSV; records must already be sorted by cloudlet_id.
///   cloudlet_id,user_id,vm_id,priority,length_mi,arrival_ms,start_ms,finish_ms,wait_ms,turnaround_ms
void write_task_csv(std::ostream& out, const std::vector<TaskRecord>& records);

/// Comparison CSV, one row per report in the given order:
///   policy,n_tasks,avg_wait_ms,max_wait_ms,makespan_ms,load_cov,starved_count
void write_comparison_csv(std::ostream& out, const std::vector<MetricsReport>& reports);

}  // namespace baassim
