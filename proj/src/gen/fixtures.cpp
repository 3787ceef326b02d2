#include "sseq/gen.hpp"

namespace sseq::gen {

PosetPtr point()
{
    return std::make_shared<const FacePoset>(std::vector<Cell>{{"p", 0}}, std::vector<Cover>{});
}

PosetPtr half_open_interval()
{
    return std::make_shared<const FacePoset>(std::vector<Cell>{{"v", 0}, {"e", 1}}, std::vector<Cover>{{0, 1, -1}});
}

PosetPtr closed_interval()
{
    return std::make_shared<const FacePoset>(std::vector<Cell>{{"v0", 0}, {"v1", 0}, {"e", 1}},
                                             std::vector<Cover>{{0, 2, -1}, {1, 2, 1}});
}

PosetPtr circle()
{
    return std::make_shared<const FacePoset>(std::vector<Cell>{{"v0", 0}, {"v1", 0}, {"e0", 1}, {"e1", 1}},
                                             std::vector<Cover>{{0, 2, -1}, {1, 2, 1}, {1, 3, -1}, {0, 3, 1}});
}

Flag vertex_flag(const FacePoset& y, const std::string& vertex)
{
    Flag f;
    f.n = 1;
    f.levels = {y.all(), y.from_names({vertex}), y.none()};
    f.validate(y);
    return f;
}

HalfOpenExample half_open_example(int source_tshift, int d)
{
    PosetPtr y = half_open_interval();
    auto k = std::make_shared<const SheafComplex>(SheafComplex::single(CellularSheaf::constant(y), -1));
    return {SheafTObject{k, source_tshift, CochainModel::automatic}, y->from_names({"v"}), d};
}

}  // namespace sseq::gen
