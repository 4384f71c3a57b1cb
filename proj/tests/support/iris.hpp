#pragma once

#include <string>

#include "asymptest/sample.hpp"
#include "dataset.hpp"

namespace testing_support {

inline asymptest::Sample petal_width(const std::string& species) {
    return asymptest::cli::ingest(
        asymptest::cli::parse_dataset_ref("iris:Petal.Width[Species==" + species + "]"));
}

}  // namespace testing_support
