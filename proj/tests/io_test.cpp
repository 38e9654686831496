#include "pegasus_topo/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pegasus_topo/chimera.hpp"
#include "pegasus_topo/pegasus.hpp"

namespace pegasus_topo {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(EdgeList, SingleCell) {
  const std::string text = export_graph(chimera_graph({1, 1, 1}), ExportFormat::EdgeListV1);
  EXPECT_TRUE(text.starts_with("# pegasus-topo v1 X=1 Y=1 Z=1\n"));
  EXPECT_EQ(count_lines(text), 17u);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(EdgeList, MatchesOracleGolden) {
  const auto golden = slurp(std::filesystem::path(PEGASUS_TOPO_GOLDEN_DIR) / "pegasus_2x2.edgelist");
  ASSERT_FALSE(golden.empty());
  for (unsigned threads : {1u, 2u, 4u, 0u})
    EXPECT_EQ(export_graph(pegasus_graph({2, 2, 3}, {threads}), ExportFormat::EdgeListV1), golden);
}

TEST(EdgeList, EmptyBody) {
  const auto g = parse_edgelist("# pegasus-topo v1 X=2 Y=3 Z=1\n");
  EXPECT_EQ(g.dims(), (Dims{2, 3, 1}));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.vertex_count(), 48u);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW((void)parse_edgelist(""), ParseError);
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v2 X=1 Y=1 Z=1\n"), ParseError);
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v1 X=1 Y=1\n"), ParseError);
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=2\n"), ParseError);
  try {
    (void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 4 chimera-intra\n0 five chimera-intra\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    (void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 4\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 4 purple\n"), ParseError);
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n0 8 chimera-intra\n"),
               ValidationError);
  EXPECT_THROW((void)parse_edgelist("# pegasus-topo v1 X=1 Y=1 Z=1\n3 3 chimera-intra\n"),
               ValidationError);
}

TEST(Formats, RoundTripAllFormats) {
  const std::vector<TopologyGraph> graphs{pegasus_graph({2, 2, 3}), pegasus_graph({3, 1, 3}),
                                          chimera_graph({2, 3, 1}), chimera_graph({1, 1, 3})};
  for (const auto& g : graphs)
    for (auto fmt : {ExportFormat::EdgeListV1, ExportFormat::Dot, ExportFormat::GraphML,
                     ExportFormat::Json}) {
      const std::string text = export_graph(g, fmt);
      EXPECT_EQ(detect_format(text), fmt);
      EXPECT_EQ(parse_graph(text), g) << to_string(fmt);
      EXPECT_EQ(parse_graph(text, fmt), g) << to_string(fmt);
      EXPECT_EQ(export_graph(parse_graph(text), fmt), text);
    }
}

TEST(Formats, DeterministicAcrossThreadCounts) {
  for (auto fmt : {ExportFormat::EdgeListV1, ExportFormat::Dot, ExportFormat::GraphML,
                   ExportFormat::Json}) {
    const auto ref = export_graph(pegasus_graph({4, 3, 3}, {1}), fmt);
    EXPECT_EQ(export_graph(pegasus_graph({4, 3, 3}, {3}), fmt), ref);
    EXPECT_EQ(export_graph(pegasus_graph({4, 3, 3}, {0}), fmt), ref);
  }
}

TEST(Formats, DotAndGraphMLCarryClass) {
  const auto g = pegasus_graph({1, 1, 3});
  const auto dot = export_graph(g, ExportFormat::Dot);
  EXPECT_NE(dot.find("[class=\"interlayer-blue\"]"), std::string::npos);
  EXPECT_TRUE(dot.starts_with("graph pegasus_topo {\n"));
  const auto gml = export_graph(g, ExportFormat::GraphML);
  EXPECT_NE(gml.find("<data key=\"class\">pegasus-intra</data>"), std::string::npos);
}

TEST(Formats, JsonErrors) {
  EXPECT_THROW((void)parse_json_graph("{"), ParseError);
  EXPECT_THROW((void)parse_json_graph(R"({"format":"other","version":1})"), ParseError);
  EXPECT_THROW(
      (void)parse_json_graph(
          R"({"format":"pegasus-topo","version":1,"dims":{"X":1,"Y":1,"Z":1},"edges":[[0,99,"chimera-intra"]]})"),
      ValidationError);
  EXPECT_THROW((void)parse_graph("hello"), ParseError);
  EXPECT_THROW((void)parse_graph("graph x {\n  bogus\n}\n"), ParseError);
}

TEST(Compressed, JsonRoundTrip) {
  const auto cg = compress(pegasus_graph({3, 2, 3}));
  EXPECT_EQ(compressed_from_json(compressed_to_json(cg)), cg);
}

TEST(Files, MissingInputIsIoError) {
  EXPECT_THROW((void)read_input("/nonexistent/dir/graph.txt"), IoError);
  EXPECT_THROW(write_output("/nonexistent/dir/out.txt", "x"), IoError);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "pegasus_topo_io_test.edgelist";
  const auto g = pegasus_graph({2, 1, 3});
  write_output(path.string(), export_graph(g, ExportFormat::EdgeListV1));
  EXPECT_EQ(parse_graph(read_input(path.string())), g);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pegasus_topo
