#include "tsx/model_io.hpp"

#include <json.hpp>

#include "tsx/error.hpp"

namespace tsx {

std::string model_to_json(const IntervalModel& model) {
    nlohmann::json grid = nlohmann::json::array();
    for (std::size_t c = 0; c < model.class_count(); ++c) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t f = 0; f < model.feature_count(); ++f) {
            const auto& cell = model.cell(c, f);
            row.push_back({cell.lo(), cell.hi()});
        }
        grid.push_back(std::move(row));
    }
    nlohmann::json doc = {{"classes", model.classes()}, {"features", model.features()}, {"intervals", grid}};
    return doc.dump(2);
}

IntervalModel model_from_json(std::string_view json) {
    try {
        const auto doc = nlohmann::json::parse(json);
        auto classes = doc.at("classes").get<std::vector<std::string>>();
        auto features = doc.at("features").get<std::vector<std::string>>();
        const auto& grid = doc.at("intervals");
        if (!grid.is_array() || grid.size() != classes.size()) {
            throw Error(ErrorCode::Parse, "model JSON: 'intervals' must have one row per class");
        }
        std::vector<Interval> cells;
        for (const auto& row : grid) {
            if (!row.is_array() || row.size() != features.size()) {
                throw Error(ErrorCode::Parse, "model JSON: every interval row needs one cell per feature");
            }
            for (const auto& cell : row) {
                if (!cell.is_array() || cell.size() != 2) {
                    throw Error(ErrorCode::Parse, "model JSON: an interval is a [lo, hi] pair");
                }
                cells.emplace_back(cell[0].get<double>(), cell[1].get<double>());
            }
        }
        return IntervalModel(std::move(classes), std::move(features), std::move(cells));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("model JSON: ") + e.what());
    }
}

}  // namespace tsx
