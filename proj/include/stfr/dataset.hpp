#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "stfr/common.hpp"
#include "stfr/time_grid.hpp"

namespace stfr {

/// One observed curve: values on a time grid.
struct FunctionalCurve {
    TimeGrid grid;
    std::vector<double> values;

    void validate() const {
        require(values.size() == grid.size(), "curve: value/grid length mismatch");
        for (double v : values) require(std::isfinite(v), "curve: non-finite value");
    }
};

/// Per-subject covariates: one curve per feature.
struct FunctionalSample {
    std::vector<FunctionalCurve> features;

    std::size_t feature_count() const { return features.size(); }
    void validate() const {
        for (const auto& c : features) c.validate();
    }
};

/// N samples with scalar responses and spatial locations in R^d.
struct SpatialDataset {
    std::vector<FunctionalSample> samples;
    std::vector<double> responses;
    std::vector<std::vector<double>> locations;
    std::vector<std::string> sample_ids; // optional; filled by ingestion

    std::size_t size() const { return samples.size(); }

    std::size_t location_dim() const {
        return locations.empty() ? 0 : locations.front().size();
    }

    std::size_t feature_count() const {
        return samples.empty() ? 0 : samples.front().feature_count();
    }

    void validate() const {
        require(samples.size() == responses.size() && samples.size() == locations.size(),
                "dataset: samples/responses/locations lengths differ");
        if (!sample_ids.empty())
            require(sample_ids.size() == samples.size(), "dataset: sample_ids length differs");
        const std::size_t r = feature_count();
        const std::size_t d = location_dim();
        for (const auto& s : samples) {
            require(s.feature_count() == r, "dataset: feature count varies across samples");
            s.validate();
        }
        for (const auto& loc : locations) {
            require(loc.size() == d, "dataset: location dimension varies across samples");
            for (double c : loc) require(std::isfinite(c), "dataset: non-finite location");
        }
        for (double y : responses) require(std::isfinite(y), "dataset: non-finite response");
    }

    SpatialDataset subset(const std::vector<std::size_t>& indices) const {
        SpatialDataset out;
        out.samples.reserve(indices.size());
        out.responses.reserve(indices.size());
        out.locations.reserve(indices.size());
        const bool ids = !sample_ids.empty();
        for (std::size_t i : indices) {
            out.samples.push_back(samples.at(i));
            out.responses.push_back(responses.at(i));
            out.locations.push_back(locations.at(i));
            if (ids) out.sample_ids.push_back(sample_ids.at(i));
        }
        return out;
    }
};

} // namespace stfr
