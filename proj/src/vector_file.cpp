#include "latticeforge/vector_file.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/io_util.hpp"

#include <json.hpp>

namespace lf {

using ordered_json = nlohmann::ordered_json;

VectorFile VectorFile::from_result(const ConstructionResult& result,
                                   const std::string& weights_descriptor,
                                   const std::string& reduction_descriptor,
                                   const std::string& method) {
    const GeneratingVector& z = result.vector;
    VectorFile f;
    f.m = z.config().m;
    f.n = z.config().n;
    f.d = z.config().d;
    f.weights = weights_descriptor;
    f.reduction = reduction_descriptor;
    f.w = z.w_all();
    f.z_reduced = z.reduced_all();
    f.z_full = z.full_all();
    f.method = method;
    f.op_count = result.op_count;
    f.wall_time_seconds = result.wall_time_seconds;
    return f;
}

GeneratingVector VectorFile::to_vector() const {
    LatticeConfig cfg(m, d);
    if (cfg.n != n)
        throw validation_error("vector file: N does not equal 2^m");
    ReductionIndices r = ReductionIndices::explicit_list(w);
    GeneratingVector z(cfg, r, z_reduced);
    if (z.full_all() != z_full)
        throw validation_error("vector file: stored full components are inconsistent");
    return z;
}

void VectorFile::save(const std::string& path) const {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["m"] = m;
    j["N"] = n;
    j["d"] = d;
    j["weights"] = weights;
    j["reduction"] = reduction;
    j["w"] = w;
    j["z_reduced"] = z_reduced;
    j["z_full"] = z_full;
    j["method"] = method;
    j["op_count"] = op_count;
    if (wce) {
        j["wce"] = {{"alpha", wce->alpha}, {"weights", wce->weights}, {"value", wce->value}};
    }
    j["wall_time_seconds"] = wall_time_seconds;
    atomic_write(path, j.dump(2) + "\n");
}

VectorFile VectorFile::load(const std::string& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("cannot parse vector file '" + path + "': " + e.what());
    }
    try {
        VectorFile f;
        f.schema_version = j.at("schema_version").get<int>();
        if (f.schema_version != 1)
            throw validation_error("unsupported vector file schema version");
        f.m = j.at("m").get<int>();
        f.n = j.at("N").get<std::int64_t>();
        f.d = j.at("d").get<int>();
        f.weights = j.at("weights").get<std::string>();
        f.reduction = j.at("reduction").get<std::string>();
        f.w = j.at("w").get<std::vector<int>>();
        f.z_reduced = j.at("z_reduced").get<std::vector<std::int64_t>>();
        f.z_full = j.at("z_full").get<std::vector<std::int64_t>>();
        f.method = j.at("method").get<std::string>();
        f.op_count = j.at("op_count").get<std::uint64_t>();
        f.wall_time_seconds = j.value("wall_time_seconds", 0.0);
        if (j.contains("wce")) {
            StoredError e;
            e.alpha = j["wce"].at("alpha").get<double>();
            e.weights = j["wce"].at("weights").get<std::string>();
            e.value = j["wce"].at("value").get<double>();
            f.wce = e;
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("vector file '" + path + "' is missing fields: " + e.what());
    }
}

} // namespace lf
