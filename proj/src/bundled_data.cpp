#include <stdexcept>
#include <vector>

#include "dt/cli.hpp"

namespace dt::cli {

namespace {

// Daily new COVID-19 cases, India, 16 March - 8 April 2021 (24 days).
const std::vector<double> kPaper1Raw = {
    28869,  35838,  39643, 40950, 43815, 40611, 47264,  53419,
    59069,  62291,  62631, 68206, 56119, 53158, 72182,  81441,
    89019,  92998,  103793, 96557, 115269, 126315, 131893, 14482,
};

// Same series with the 24th value read as 144820; the printed 14482 breaks
// the otherwise monotone trend of the final week and the corrected value is
// the one that reproduces the reference fits.
const std::vector<double> kPaper1AltRaw = {
    28869,  35838,  39643, 40950, 43815, 40611, 47264,  53419,
    59069,  62291,  62631, 68206, 56119, 53158, 72182,  81441,
    89019,  92998,  103793, 96557, 115269, 126315, 131893, 144820,
};

// Survival times (days) of lab mice exposed to radiation, deaths from causes
// other than thymic lymphoma or reticulum cell sarcoma (39 animals).
const std::vector<std::int64_t> kPaper2 = {
    40,  42,  51,  62,  163, 179, 206, 222, 228, 252, 259, 282, 324,
    333, 341, 366, 385, 407, 420, 431, 441, 461, 462, 482, 517, 517,
    524, 564, 567, 586, 619, 620, 621, 622, 647, 651, 686, 761, 763,
};

}  // namespace

bool is_bundled(const std::string& name) {
    return name == "paper-I" || name == "paper-I-alt" || name == "paper-II";
}

est::Dataset bundled_dataset(const std::string& name) {
    if (name == "paper-I") return est::Dataset::from_raw(kPaper1Raw, 10000.0);
    if (name == "paper-I-alt") return est::Dataset::from_raw(kPaper1AltRaw, 10000.0);
    if (name == "paper-II") return est::Dataset::from_values(kPaper2);
    throw std::invalid_argument("unknown bundled dataset: " + name);
}

}  // namespace dt::cli
