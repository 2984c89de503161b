#include <doctest.h>

#include "bicliq/error.hpp"
#include "bicliq/families.hpp"
#include "bicliq/json_io.hpp"
#include "support/support.hpp"

using namespace bicliq;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("json") {
    TEST_CASE("graph round trip") {
        testkit::Rng rng(73);
        for (int i = 0; i < 50; ++i) {
            const auto g = testkit::random_graph(1 + rng.below(6), 1 + rng.below(6), rng.unit(), rng);
            CHECK(graph_from_json(to_json(g)) == g);
            CHECK(parse_graph_any(to_json(g).dump()) == g);
            CHECK(parse_graph_any(g.to_matrix_text()) == g);
        }
        const auto j = to_json(pattern_p4());
        CHECK(j["n_top"] == 2);
        CHECK(j["rows"][1] == "01");
    }

    TEST_CASE("certificate and embedding round trip") {
        const Certificate c{CertificateKind::CoBiclique, {0, 2}, {1, 3}};
        const auto j = to_json(c);
        CHECK(j["kind"] == "cobiclique");
        CHECK(j["size"] == 2);
        const auto back = certificate_from_json(j);
        CHECK(back.kind == c.kind);
        CHECK(back.top_set == c.top_set);
        CHECK(back.bottom_set == c.bottom_set);

        const Embedding e{{3, 1}, {0, 2, 4}};
        CHECK(embedding_from_json(to_json(e)) == e);
    }

    TEST_CASE("dichotomy and classification shapes") {
        Dichotomy d;
        d.pattern = pattern_2k2();
        d.cert = Certificate{CertificateKind::Biclique, {0}, {0}};
        d.guaranteed = 1;
        d.route = "cert:test";
        const auto j = to_json(d);
        CHECK(j["branch"] == "certificate");
        CHECK(j["certificate"]["size"] == 1);
        CHECK(j["route"] == "cert:test");

        const auto c = to_json(classify(pattern_p7()));
        CHECK(c["tag"] == "Exceptional");
        CHECK(c["which"] == "P7");
    }

    TEST_CASE("bad json") {
        CHECK(code_of([] { parse_graph_any("{not json"); }) == ErrorCode::BadJson);
        CHECK(code_of([] { graph_from_json(Json{{"rows", 5}}); }) == ErrorCode::BadJson);
        CHECK(code_of([] { graph_from_json(Json::parse(R"({"n_top":2,"n_bottom":2,"rows":["10","1"]})")); }) ==
              ErrorCode::RaggedInput);
        CHECK(code_of([] { certificate_from_json(Json::parse(R"({"kind":"clique","top":[],"bottom":[]})")); }) ==
              ErrorCode::BadJson);
        CHECK(code_of([] { embedding_from_json(Json::parse(R"({"top_map":[-1],"bottom_map":[]})")); }) ==
              ErrorCode::BadJson);
    }
}
