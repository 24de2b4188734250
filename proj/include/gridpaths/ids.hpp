#pragma once

#include <cctype>
#include <string>

namespace gridpaths {

// Numeric-aware ordering on element ids: digit runs compare by value, so
// "e2" < "e10". Used everywhere an ordering over ids is needed, to keep
// every result deterministic regardless of input order.
inline int natural_compare(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        char ca = a[i], cb = b[j];
        if (std::isdigit(static_cast<unsigned char>(ca)) &&
            std::isdigit(static_cast<unsigned char>(cb))) {
            std::size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
            while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
            std::size_t ia = i0, jb = j0;
            while (ia < i && a[ia] == '0') ++ia;  // strip leading zeros
            while (jb < j && b[jb] == '0') ++jb;
            std::size_t la = i - ia, lb = j - jb;
            if (la != lb) return la < lb ? -1 : 1;
            for (std::size_t k = 0; k < la; ++k)
                if (a[ia + k] != b[jb + k]) return a[ia + k] < b[jb + k] ? -1 : 1;
            // Equal value: shorter digit run (fewer leading zeros) first.
            std::size_t ra = i - i0, rb = j - j0;
            if (ra != rb) return ra < rb ? -1 : 1;
        } else {
            if (ca != cb) return ca < cb ? -1 : 1;
            ++i;
            ++j;
        }
    }
    std::size_t ra = a.size() - i, rb = b.size() - j;
    if (ra != rb) return ra < rb ? -1 : 1;
    return 0;
}

inline bool natural_less(const std::string& a, const std::string& b) {
    return natural_compare(a, b) < 0;
}

struct NaturalLess {
    using is_transparent = void;
    bool operator()(const std::string& a, const std::string& b) const {
        return natural_less(a, b);
    }
};

}  // namespace gridpaths
