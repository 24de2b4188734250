#include "gridpaths/config.hpp"

namespace gridpaths {

const char* mode_name(Mode m) { return m == Mode::academic ? "academic" : "casestudy"; }

Mode parse_mode(const std::string& name) {
    if (name == "academic") return Mode::academic;
    if (name == "casestudy") return Mode::casestudy;
    fail(Errc::unknown_key, "mode '" + name + "'");
}

void PipelineConfig::validate() const {
    auto positive = [](double v, const char* key) {
        if (!(v > 0.0)) fail(Errc::invalid_threshold, std::string(key) + " must be > 0");
    };
    positive(r, "r");
    positive(l, "l");
    positive(d_oh, "d_oh");
    positive(d_cab, "d_cab");
    positive(d_cb, "d_cb");
    positive(min_line_length, "min_line_length");
    if (cap == 0) fail(Errc::invalid_threshold, "cap must be > 0");
    if (n && *n == 0) fail(Errc::invalid_threshold, "n must be > 0");
    if (d_p) positive(*d_p, "d_p");
    if (m && *m == 0) fail(Errc::invalid_threshold, "m must be > 0");
    if (mode == Mode::casestudy) {
        if (!n || !d_p || !m)
            fail(Errc::invalid_threshold, "casestudy mode requires n, d_p and m");
    }
}

}  // namespace gridpaths
