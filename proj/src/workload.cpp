#include "baassim/workload.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "baassim/errors.hpp"

namespace baassim {

namespace {

constexpr std::string_view kCsvHeader =
    "cloudlet_id,user_id,length_mi,file_size,output_size,pes,priority,arrival_ms";

void validate_config(const WorkloadConfig& config) {
    if (config.num_cloudlets < 0) {
        throw ConfigError("num_cloudlets must be >= 0");
    }
    switch (config.length.kind) {
        case LengthDist::Kind::Constant:
            if (config.length.value < 1) {
                throw ConfigError("length value must be >= 1");
            }
            break;
        case LengthDist::Kind::Uniform:
            if (config.length.min < 1) {
                throw ConfigError("length.min must be >= 1");
            }
            if (config.length.min > config.length.max) {
                throw ConfigError("length.min must be <= length.max");
            }
            break;
    }
    if (config.priority.kind == PriorityDist::Kind::Constant && config.priority.value < 0) {
        throw ConfigError("priority value must be >= 0");
    }
    if (config.priority.kind == PriorityDist::Kind::Uniform && config.priority.levels < 1) {
        throw ConfigError("priority levels must be >= 1");
    }
    if (config.arrival.kind == ArrivalModel::Kind::UniformJitter) {
        if (config.arrival.base_interval_ms < 0) {
            throw ConfigError("base_interval_ms must be >= 0");
        }
        if (config.arrival.jitter_ms < 0) {
            throw ConfigError("jitter_ms must be >= 0");
        }
    }
    if (config.file_size < 0 || config.output_size < 0) {
        throw ConfigError("file_size and output_size must be >= 0");
    }
    if (config.pes < 1) {
        throw ConfigError("pes must be >= 1");
    }
}

std::int64_t parse_int_field(std::string_view field, int line, std::string_view name) {
    std::int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ConfigError("line " + std::to_string(line) + ": " + std::string(name) +
                          " is not an integer: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

std::int64_t Prng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw SimError("Prng::uniform: lo > hi");
    }
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(next() % range);
}

std::vector<Cloudlet> generate(const WorkloadConfig& config) {
    validate_config(config);
    Prng rng(config.seed);

    std::vector<Cloudlet> out;
    out.reserve(static_cast<std::size_t>(config.num_cloudlets));
    for (std::int64_t i = 0; i < config.num_cloudlets; ++i) {
        Cloudlet c;
        c.length_mi = config.length.kind == LengthDist::Kind::Uniform
                          ? rng.uniform(config.length.min, config.length.max)
                          : config.length.value;
        c.priority = config.priority.kind == PriorityDist::Kind::Uniform
                         ? static_cast<int>(rng.uniform(0, config.priority.levels - 1))
                         : config.priority.value;
        if (config.arrival.kind == ArrivalModel::Kind::UniformJitter) {
            const unsigned __int128 base = static_cast<unsigned __int128>(i) *
                                           static_cast<unsigned __int128>(config.arrival.base_interval_ms);
            const std::int64_t jitter = rng.uniform(0, config.arrival.jitter_ms);
            const unsigned __int128 arrival = base + static_cast<unsigned __int128>(jitter);
            if (arrival > static_cast<unsigned __int128>(std::numeric_limits<TimeMs>::max())) {
                throw ConfigError("arrival_ms overflows 64-bit milliseconds");
            }
            c.arrival_ms = static_cast<TimeMs>(arrival);
        }
        c.file_size = config.file_size;
        c.output_size = config.output_size;
        c.pes = config.pes;
        c.cloudlet_id = i;  // provisional; reassigned after the arrival sort
        out.push_back(c);
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Cloudlet& a, const Cloudlet& b) { return a.arrival_ms < b.arrival_ms; });
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        out[pos].cloudlet_id = static_cast<CloudletId>(pos);
        out[pos].user_id = static_cast<UserId>(pos);
    }
    return out;
}

void validate_workload(const std::vector<Cloudlet>& cloudlets) {
    TimeMs prev_arrival = 0;
    for (std::size_t i = 0; i < cloudlets.size(); ++i) {
        const Cloudlet& c = cloudlets[i];
        if (c.cloudlet_id != static_cast<CloudletId>(i)) {
            throw ConfigError("cloudlet ids must be dense from 0 in list order (position " +
                              std::to_string(i) + " holds id " + std::to_string(c.cloudlet_id) + ")");
        }
        if (c.length_mi < 1) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": length_mi must be >= 1");
        }
        if (c.pes < 1) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": pes must be >= 1");
        }
        if (c.priority < 0) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": priority must be >= 0");
        }
        if (c.arrival_ms < 0) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": arrival_ms must be >= 0");
        }
        if (c.user_id < 0 || c.file_size < 0 || c.output_size < 0) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": negative field");
        }
        if (i > 0 && c.arrival_ms < prev_arrival) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) +
                              ": arrival_ms must be nondecreasing in cloudlet_id");
        }
        prev_arrival = c.arrival_ms;
    }
}

std::vector<Cloudlet> load_workload_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open workload file: " + path.string());
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError(path.string() + ": empty file (expected header '" +
                          std::string(kCsvHeader) + "')");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw ConfigError(path.string() + ": line 1: bad header, expected '" +
                          std::string(kCsvHeader) + "'");
    }

    struct Row {
        Cloudlet cloudlet;
        int line = 0;
    };
    std::vector<Row> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;  // tolerate a trailing blank line
        }
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            if (comma == std::string_view::npos) {
                fields.push_back(rest);
                break;
            }
            fields.push_back(rest.substr(0, comma));
            rest = rest.substr(comma + 1);
        }
        if (fields.size() != 8) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 8 fields, got " +
                              std::to_string(fields.size()));
        }

        Cloudlet c;
        c.cloudlet_id = parse_int_field(fields[0], line_no, "cloudlet_id");
        c.user_id = parse_int_field(fields[1], line_no, "user_id");
        c.length_mi = parse_int_field(fields[2], line_no, "length_mi");
        c.file_size = parse_int_field(fields[3], line_no, "file_size");
        c.output_size = parse_int_field(fields[4], line_no, "output_size");
        c.pes = static_cast<int>(parse_int_field(fields[5], line_no, "pes"));
        c.priority = static_cast<int>(parse_int_field(fields[6], line_no, "priority"));
        c.arrival_ms = parse_int_field(fields[7], line_no, "arrival_ms");

        const std::string at = "line " + std::to_string(line_no) + ": ";
        if (c.cloudlet_id < 0) throw ConfigError(at + "cloudlet_id must be >= 0");
        if (c.user_id < 0) throw ConfigError(at + "user_id must be >= 0");
        if (c.length_mi < 1) throw ConfigError(at + "length_mi must be >= 1");
        if (c.file_size < 0) throw ConfigError(at + "file_size must be >= 0");
        if (c.output_size < 0) throw ConfigError(at + "output_size must be >= 0");
        if (c.pes < 1) throw ConfigError(at + "pes must be >= 1");
        if (c.priority < 0) throw ConfigError(at + "priority must be >= 0");
        if (c.arrival_ms < 0) throw ConfigError(at + "arrival_ms must be >= 0");

        rows.push_back({c, line_no});
    }
    if (in.bad()) {
        throw ConfigError("I/O error while reading " + path.string());
    }

    // Rows may arrive in any order; id order and (arrival_ms, id) order must
    // coincide, so sorting by id both validates and produces the final order.
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.cloudlet.cloudlet_id, a.line) < std::tie(b.cloudlet.cloudlet_id, b.line);
    });

    std::vector<Cloudlet> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (i > 0 && row.cloudlet.cloudlet_id == rows[i - 1].cloudlet.cloudlet_id) {
            throw ConfigError("line " + std::to_string(row.line) + ": duplicate cloudlet_id " +
                              std::to_string(row.cloudlet.cloudlet_id));
        }
        if (row.cloudlet.cloudlet_id != static_cast<CloudletId>(i)) {
            throw ConfigError("line " + std::to_string(row.line) +
                              ": cloudlet ids must be dense from 0 (missing id " +
                              std::to_string(i) + ")");
        }
        if (i > 0 && row.cloudlet.arrival_ms < rows[i - 1].cloudlet.arrival_ms) {
            throw ConfigError("line " + std::to_string(row.line) +
                              ": arrival_ms must be nondecreasing in cloudlet_id");
        }
        out.push_back(row.cloudlet);
    }
    validate_workload(out);
    return out;
}

void write_workload_csv(std::ostream& out, const std::vector<Cloudlet>& cloudlets) {
    out << kCsvHeader << '\n';
    for (const Cloudlet& c : cloudlets) {
        out << c.cloudlet_id << ',' << c.user_id << ',' << c.length_mi << ',' << c.file_size << ','
            << c.output_size << ',' << c.pes << ',' << c.priority << ',' << c.arrival_ms << '\n';
    }
}

}  // namespace baassim
