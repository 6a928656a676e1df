#include "baassim/svg.hpp"

#include <sstream>

namespace baassim {

namespace {

std::int64_t avg_thousandths(const MetricsReport& r) {
    if (r.n_tasks == 0) {
        return 0;
    }
    const __int128 scaled = static_cast<__int128>(r.total_wait_ms) * 1000;
    return static_cast<std::int64_t>((2 * scaled + r.n_tasks) / (2 * static_cast<__int128>(r.n_tasks)));
}

}  // namespace

std::string comparison_svg(const std::vector<MetricsReport>& reports) {
    constexpr int kBarWidth = 90;
    constexpr int kGap = 50;
    constexpr int kLeft = 60;
    constexpr int kBaseline = 300;
    constexpr int kMaxBar = 240;

    const int n = static_cast<int>(reports.size());
    const int width = kLeft + n * (kBarWidth + kGap) + 20;
    const int height = kBaseline + 50;

    std::int64_t max_avg = 0;
    std::vector<std::int64_t> avgs;
    avgs.reserve(reports.size());
    for (const MetricsReport& r : reports) {
        avgs.push_back(avg_thousandths(r));
        max_avg = std::max(max_avg, avgs.back());
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <title>Average waiting time by scheduling policy</title>\n";
    os << "  <line x1=\"" << kLeft - 10 << "\" y1=\"" << kBaseline << "\" x2=\"" << width - 10
       << "\" y2=\"" << kBaseline << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (int i = 0; i < n; ++i) {
        const int x = kLeft + i * (kBarWidth + kGap);
        const int bar_h =
            max_avg == 0 ? 0
                         : static_cast<int>(static_cast<__int128>(kMaxBar) * avgs[static_cast<std::size_t>(i)] / max_avg);
        const int y = kBaseline - bar_h;
        const auto name = policy_name(reports[static_cast<std::size_t>(i)].policy);
        os << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kBarWidth
           << "\" height=\"" << bar_h << "\" fill=\"#4a90d9\"/>\n";
        os << "  <text class=\"value\" x=\"" << x + kBarWidth / 2 << "\" y=\"" << y - 8
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
           << format_milli3(avgs[static_cast<std::size_t>(i)]) << "</text>\n";
        os << "  <text class=\"label\" x=\"" << x + kBarWidth / 2 << "\" y=\"" << kBaseline + 24
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << name
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace baassim
