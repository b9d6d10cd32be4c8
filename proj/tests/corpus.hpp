// Ring corpus shared by the ring, euclidean and acceptance tests.

#ifndef EUCLID_TESTS_CORPUS_HPP
#define EUCLID_TESTS_CORPUS_HPP

#include <string>
#include <vector>

namespace corpus {

inline const std::vector<std::string>& principal_rings() {
    static const std::vector<std::string> specs{
        "Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "Z/9", "Z/12", "Z/16", "Z/18", "Z/25", "Z/27", "Z/30", "Z/36", "Z/60",
        "GF(4)", "GF(8)", "GF(9)",
        "GF(2)[t]/(t^2)", "GF(2)[t]/(t^2+t)", "GF(2)[t]/(t^3+t+1)", "GF(2)[t]/(t^4)", "GF(3)[t]/(t^2)",
        "GF(3)[t]/(t^2+1)", "GF(4)[t]/(t^2)", "GF(2)[t]/(t^3+t^2)",
        "Z/2 x Z/3", "Z/4 x Z/9", "Z/8 x GF(2)[t]/(t^2)", "Z/2 x Z/2", "Z/4 x Z/2", "Z/3 x GF(4)",
        "Z/9 x GF(2)[t]/(t^2)", "Z/4 x Z/4", "Z/2 x GF(2)[t]/(t^3)",
    };
    return specs;
}

inline const std::vector<std::string>& product_pairs() {
    // each entry is "A|B"; the product A x B has at most 512 elements
    static const std::vector<std::string> pairs{
        "Z/4|Z/9", "Z/8|GF(2)[t]/(t^2)", "Z/2|Z/3", "Z/2|Z/2", "Z/3|Z/3", "Z/4|Z/2", "Z/8|Z/8", "Z/9|Z/9",
        "Z/16|Z/3", "Z/27|Z/4", "GF(4)|Z/5", "GF(2)[t]/(t^3)|Z/4", "GF(3)[t]/(t^2)|Z/8", "Z/6|Z/10",
        "Z/12|Z/4", "GF(2)[t]/(t^2+t)|Z/9", "Z/32|Z/2", "GF(8)|GF(2)[t]/(t^2)", "Z/25|Z/4", "Z/7|Z/49",
        "GF(9)|Z/9", "Z/16|GF(2)[t]/(t^4)",
    };
    return pairs;
}

}  // namespace corpus

#endif
