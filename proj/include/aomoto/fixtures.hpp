#ifndef AOMOTO_FIXTURES_HPP
#define AOMOTO_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "aomoto/curve.hpp"

namespace aomoto::fixtures {

/// Regression row: an operation applied to the fixture with a pinned
/// result. tag records where the value comes from ("printed" for values
/// stated in the source material, "derived" for values recomputed here).
struct Expected {
    std::string op; // "h1", "dim2"
    std::int64_t p = 0;
    std::vector<std::int64_t> omega; // empty means all ones
    std::int64_t value = 0;
    std::string tag;
};

struct Fixture {
    std::string name;
    nlohmann::json curve;
    std::map<std::string, nlohmann::json> pencils; // name -> document
    std::vector<Expected> expected;
};

std::vector<std::string> list();
const Fixture& load(const std::string& name);
bool has(const std::string& name);

/// Curve named `name`, or the pencil document `name` when it ends in
/// "-pencil". Throws on unknown names.
nlohmann::json dump(const std::string& name);

/// Two degree-d curves with a single common point of maximal contact d^2.
nlohmann::json maximal_contact_pair(std::int64_t d);

} // namespace aomoto::fixtures

#endif
