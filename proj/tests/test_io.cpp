#include <gtest/gtest.h>

#include <functional>

#include "ordlip/io.hpp"

using namespace ordlip;
using io::json;

namespace {

std::string where_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const io::SchemaError& e) {
        return e.where() + " | " + e.what();
    }
    return "";
}

} // namespace

TEST(Io, PosetRoundTrip) {
    const json j = json::parse(R"({"labels":["a","b"],"dist":[[0,1.5],[1.5,0]],"order":[[1,0]]})");
    const auto p = io::poset_from_json(j);
    EXPECT_TRUE(p.geq(1, 0));
    EXPECT_EQ(io::poset_to_json(p), j);
}

TEST(Io, NonSymmetricNamesEntry) {
    const json j = json::parse(R"({"labels":["a","b","c"],"dist":[[0,1,1],[1,0,1],[1,2,0]],"order":[]})");
    const std::string msg = where_of([&] { io::poset_from_json(j); });
    EXPECT_NE(msg.find("/dist/1/2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(1, 2)"), std::string::npos) << msg;
}

TEST(Io, MissingAndMistypedFields) {
    EXPECT_NE(where_of([] { io::poset_from_json(json::parse(R"({"labels":["a"]})")); }).find("/dist"), std::string::npos);
    EXPECT_NE(where_of([] { io::poset_from_json(json::parse(R"({"labels":["a"],"dist":[["x"]]})")); }).find("/dist/0/0"),
              std::string::npos);
    EXPECT_NE(where_of([] { io::cone_from_json(json::parse(R"({"dim":2,"norm":"l7","generators":[]})")); }).find("/norm"),
              std::string::npos);
}

TEST(Io, SyntaxErrorHasLine) {
    const std::string msg = where_of([] { io::parse_text("{\n  \"a\": 1,\n  oops\n}", "f.json"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Io, TreeCycleMessage) {
    const json j = json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b",1],["b","c",1],["c","a",1]],"root":"a","end":"c"})");
    const std::string msg = where_of([&] { io::tree_from_json(j); });
    EXPECT_NE(msg.find("edges not acyclic"), std::string::npos) << msg;
}

TEST(Io, TreePointAddressing) {
    const json j = json::parse(R"({"vertices":["r","a","b","end"],"edges":[["r","a",2],["a","b",1.5],["a","end",1]],"root":"r","end":"end"})");
    const auto T = io::tree_from_json(j);
    const auto p = io::tree_point_from_json(T, json::parse(R"({"edge":1,"offset":0.5})"));
    EXPECT_EQ(io::tree_point_to_json(T, p), json::parse(R"({"edge":1,"offset":0.5})"));
    EXPECT_EQ(io::tree_point_to_json(T, T.vertex(2)), json::parse(R"({"vertex":"b"})"));
    EXPECT_EQ(io::tree_to_json(T), j);
}

TEST(Io, ConeAndProblem) {
    const json cone = json::parse(R"({"dim":2,"generators":[[1,0],[0,1]],"norm":"linf"})");
    EXPECT_EQ(io::cone_to_json(io::cone_from_json(cone)), cone);
    const json prob = json::parse(R"({
      "poset":{"labels":["x","y","z"],"dist":[[0,2.23606797749979,1.4142135623730951],[2.23606797749979,0,1],[1.4142135623730951,1,0]],"order":[[1,2]]},
      "subset":[0,1],"target":{"kind":"scalar"},"values":[2.23606797749979,0]})");
    const auto P = io::problem_from_json(prob);
    EXPECT_TRUE(P.scalar());
    EXPECT_EQ(P.subset().size(), 2u);
}

TEST(Io, RoundingAndDigest) {
    json j = {{"a", 1.0 / 3.0}, {"b", {2.0 / 3.0, 7}}};
    io::round_floats(j);
    EXPECT_EQ(j.dump(), R"({"a":0.333333333,"b":[0.666666667,7]})");
    EXPECT_EQ(io::digest(""), "cbf29ce484222325");
    EXPECT_EQ(io::digest("a"), "af63dc4c8601ec8c");
}
