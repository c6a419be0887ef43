#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "homlie/error.hpp"
#include "homlie/io.hpp"
#include "homlie/lieify.hpp"
#include "homlie/structure.hpp"

namespace {

using namespace homlie;

struct InputRecord {
  std::string label;
  std::string path;
  std::string digest;
};

std::vector<InputRecord> g_inputs;

std::string slurp(const std::string& path, const std::string& label) {
  std::string bytes = readFile(path);
  g_inputs.push_back({label, path, digestOf(bytes)});
  return bytes;
}

jdoc parseJsonFile(const std::string& path, const std::string& label) {
  try {
    return jdoc::parse(slurp(path, label));
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("malformed JSON in " + path + ": " + std::string(e.what()));
  }
}

HomLieAlgebra loadAlgebraTracked(const std::string& path,
                                 const std::string& label) {
  return algebraFromJson(parseJsonFile(path, label));
}

jdoc inputsJson() {
  jdoc j = jdoc::object();
  for (const auto& rec : g_inputs) {
    j[rec.label] = {{"path", rec.path}, {"digest", rec.digest}};
  }
  return j;
}

void emitReport(const std::string& command, const CheckReport& report,
                const std::string& mode, const jdoc& results = jdoc()) {
  if (mode == "json") {
    jdoc j;
    j["command"] = command;
    j["inputs"] = inputsJson();
    j["checks"] = reportToJson(report);
    if (!results.is_null()) j["results"] = results;
    std::cout << canonicalDump(j);
  } else {
    std::cout << reportToText(report);
    if (!results.is_null()) {
      for (auto it = results.begin(); it != results.end(); ++it) {
        std::cout << "INFO " << it.key() << " = " << it.value().dump() << "\n";
      }
    }
  }
}

int cmdCheck(const std::string& file, const std::string& mode) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  CheckReport report = checkQuadraticHomLie(A);
  emitReport("check", report, mode);
  return report.allPassed() ? 0 : 1;
}

int cmdExtendSimple(const std::string& hFile, const std::string& sFile,
                    const std::string& fFile, const std::string& rhoFile,
                    const std::string& etaStr, const std::string& outFile) {
  HomLieAlgebra core = loadAlgebraTracked(hFile, "h");
  HomLieAlgebra acting = loadAlgebraTracked(sFile, "s");
  if (!acting.form)
    throw parse_error("the acting algebra document must carry a form");
  Mat f = matFromJson(parseJsonFile(fFile, "f"));
  jdoc rhoDoc = parseJsonFile(rhoFile, "rho");
  if (!rhoDoc.is_array()) throw parse_error("rho document must be an array");
  std::vector<Mat> rho;
  for (const auto& m : rhoDoc) rho.push_back(matFromJson(m));
  Rat eta = Rat::fromString(etaStr);

  DoubleExtensionData data{std::move(core), acting.bracket, *acting.form,
                           std::move(f), std::move(rho), eta};
  CheckReport report = validateDoubleExtension(data);
  emitReport("extend prop11", report, "text");
  if (!report.allPassed()) return 1;
  saveAlgebra(outFile, doubleExtend(data));
  return 0;
}

int cmdExtendLine(const std::string& hFile, const std::string& dFile,
                  const std::string& vprimeCsv, const std::string& lambdaStr,
                  const std::string& outFile) {
  HomLieAlgebra core = loadAlgebraTracked(hFile, "h");
  Mat D = matFromJson(parseJsonFile(dFile, "D"));
  Vec vprime = vprimeCsv.empty() ? Vec(Vec::Zero(core.dim()))
                                 : vecFromCsv(vprimeCsv);
  Rat lambda = Rat::fromString(lambdaStr);

  LineExtensionData data{std::move(core), std::move(D), std::move(vprime),
                         lambda};
  CheckReport report = validateLineExtension(data);
  emitReport("extend prop12", report, "text");
  if (!report.allPassed()) return 1;
  saveAlgebra(outFile, lineExtend(data));
  return 0;
}

int cmdDecompose(const std::string& file, const std::string& outDir,
                 const std::string& mode) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  DecompositionResult result = decompose(A);

  std::filesystem::create_directories(outDir);
  const auto out = [&](const std::string& name) {
    return (std::filesystem::path(outDir) / name).string();
  };
  saveAlgebra(out("reconstruction.json"), result.reconstruction);

  jdoc extracted;
  extracted["kind"] = result.kind == ExtensionKind::Simple ? "simple"
                                                           : "one-dimensional";
  extracted["ideal"] = subspaceToJson(result.ideal);
  extracted["iperp"] = subspaceToJson(result.iperp);
  extracted["s"] = subspaceToJson(result.s);
  extracted["h"] = subspaceToJson(result.h);
  extracted["iso"] = matToJson(result.iso);
  if (result.kind == ExtensionKind::Simple) {
    const auto& blocks = std::get<SimpleBlocks>(result.blocks);
    jdoc b;
    b["f"] = matToJson(blocks.f);
    b["g"] = matToJson(blocks.g);
    b["L"] = matToJson(blocks.L);
    b["R"] = matToJson(blocks.R);
    jdoc rho = jdoc::array(), sigma = jdoc::array(), gamma = jdoc::array();
    for (const Mat& m : blocks.rho) rho.push_back(matToJson(m));
    for (const Mat& m : blocks.sigma) sigma.push_back(matToJson(m));
    for (const Mat& m : blocks.gamma) gamma.push_back(matToJson(m));
    b["rho"] = std::move(rho);
    b["sigma"] = std::move(sigma);
    b["gamma"] = std::move(gamma);
    b["psi"] = matToJson(blocks.psi);
    b["eta"] = blocks.eta.str();
    extracted["blocks"] = std::move(b);
  } else {
    const auto& blocks = std::get<LineBlocks>(result.blocks);
    jdoc b;
    b["D"] = matToJson(blocks.dmap);
    b["vprime"] = vecToJson(blocks.vprime);
    b["lambda"] = blocks.lambda.str();
    b["L"] = matToJson(blocks.L);
    b["gamma"] = matToJson(blocks.gamma);
    extracted["blocks"] = std::move(b);
  }
  writeFile(out("decomposition.json"), canonicalDump(extracted));

  jdoc results;
  results["kind"] = extracted["kind"];
  results["output_dir"] = outDir;
  emitReport("decompose", result.report, mode, results);
  return result.report.allPassed() ? 0 : 1;
}

int cmdLieify(const std::string& file, const std::string& outFile) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  saveAlgebra(outFile, lieify(A));
  return 0;
}

int cmdCocycle(const std::string& file, const std::string& mode) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  CocycleData C = associatedCocycle(A);

  CheckReport report;
  report.add("theta_skew", true);
  const bool cocycle = isCocycle(A, C);
  report.add("theta_is_cocycle", cocycle);

  jdoc results;
  results["complement_dim"] = C.d;
  CoboundaryResult cb = coboundaryWitness(A, C);
  results["theta_is_coboundary"] = cb.isCoboundary;
  if (cb.mu) results["mu"] = matToJson(*cb.mu);

  RecoveryMap rec = recoverBracket(A, C);
  report.add("recovery_feasible", rec.feasible,
             rec.feasible ? std::nullopt : rec.infeasiblePair);
  if (rec.feasible) {
    results["recovery_flags"] = {
        {"maps_coefficients_onto_twist_kernel",
         rec.mapsCoefficientsOntoTwistKernel},
        {"maps_algebra_onto_complement_perp",
         rec.mapsAlgebraOntoComplementPerp},
        {"kernel_is_complement", rec.kernelIsComplement}};
  }

  if (cocycle && !cb.isCoboundary) {
    report.merge(centerTrivialityConsequences(A), "");
  }

  emitReport("cocycle", report, mode, results);
  return report.allPassed() ? 0 : 1;
}

int cmdFitting(const std::string& file) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  FittingResult fit = fitting(A);
  std::cout << "ell " << fit.ell << "\n";
  std::cout << "image_part dim " << fit.imagePart.dim() << "\n";
  std::cout << canonicalDump(matToJson(fit.imagePart.basis()));
  std::cout << "kernel_part dim " << fit.kernelPart.dim() << "\n";
  std::cout << canonicalDump(matToJson(fit.kernelPart.basis()));
  return 0;
}

int cmdSimpleCheck(const std::string& file) {
  HomLieAlgebra A = loadAlgebraTracked(file, "file");
  if (!A.form) throw parse_error("simple-check needs a document with a form");
  bool simple;
  try {
    simple = isSimpleQuadratic(A.bracket, *A.form);
  } catch (const error& e) {
    // Precondition violations (non-Lie bracket, bad form) are input errors.
    throw parse_error(e.what());
  }
  std::cout << (simple ? "simple" : "not simple") << "\n";
  return simple ? 0 : 1;
}

int cmdExampleSl2(const std::string& etaStr, const std::string& outFile) {
  saveAlgebra(outFile, sl2Example(Rat::fromString(etaStr)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for quadratic Hom-Lie algebras"};
  app.require_subcommand(1);

  std::string file, outFile, outDir, mode = "text";
  std::string hFile, sFile, fFile, rhoFile, dFile;
  std::string etaStr = "0", lambdaStr = "0", vprimeCsv;

  auto* check = app.add_subcommand("check", "Run the axiom suite on a document");
  check->add_option("file", file)->required();
  check->add_option("--report", mode)->check(CLI::IsMember({"text", "json"}));

  auto* extend = app.add_subcommand("extend", "Build a double extension");
  extend->require_subcommand(1);
  auto* p11 = extend->add_subcommand(
      "prop11", "Extension by a quadratic Lie algebra action");
  p11->set_help_flag("--help", "Print this help message and exit");
  p11->add_option("--h", hFile)->required();
  p11->add_option("--s", sFile)->required();
  p11->add_option("--f", fFile)->required();
  p11->add_option("--rho", rhoFile)->required();
  p11->add_option("--eta", etaStr)->required();
  p11->add_option("-o,--out", outFile)->required();
  auto* p12 = extend->add_subcommand(
      "prop12", "Extension by a skew map and a line pair");
  p12->set_help_flag("--help", "Print this help message and exit");
  p12->add_option("--h", hFile)->required();
  p12->add_option("--D", dFile)->required();
  p12->add_option("--vprime", vprimeCsv);
  p12->add_option("--lambda", lambdaStr)->required();
  p12->add_option("-o,--out", outFile)->required();

  auto* decomposeCmd =
      app.add_subcommand("decompose", "Structure decomposition + round trip");
  decomposeCmd->add_option("file", file)->required();
  decomposeCmd->add_option("-o,--out", outDir)->required();
  decomposeCmd->add_option("--report", mode)
      ->check(CLI::IsMember({"text", "json"}));

  auto* lieifyCmd =
      app.add_subcommand("lieify", "Associated Lie bracket T([.,.])");
  lieifyCmd->add_option("file", file)->required();
  lieifyCmd->add_option("-o,--out", outFile)->required();

  auto* cocycleCmd = app.add_subcommand(
      "cocycle", "Canonical cocycle, coboundary test, bracket recovery");
  cocycleCmd->add_option("file", file)->required();
  cocycleCmd->add_option("--report", mode)
      ->check(CLI::IsMember({"text", "json"}));

  auto* fittingCmd =
      app.add_subcommand("fitting", "Fitting decomposition of the twist");
  fittingCmd->add_option("file", file)->required();

  auto* simpleCmd = app.add_subcommand(
      "simple-check", "Simplicity criterion for a quadratic Lie document");
  simpleCmd->add_option("file", file)->required();

  auto* example = app.add_subcommand("example", "Write a built-in example");
  example->require_subcommand(1);
  auto* sl2 = example->add_subcommand("sl2", "The 9-dimensional sl2 example");
  sl2->add_option("--eta", etaStr)->required();
  sl2->add_option("-o,--out", outFile)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmdCheck(file, mode);
    if (p11->parsed())
      return cmdExtendSimple(hFile, sFile, fFile, rhoFile, etaStr, outFile);
    if (p12->parsed())
      return cmdExtendLine(hFile, dFile, vprimeCsv, lambdaStr, outFile);
    if (decomposeCmd->parsed()) return cmdDecompose(file, outDir, mode);
    if (lieifyCmd->parsed()) return cmdLieify(file, outFile);
    if (cocycleCmd->parsed()) return cmdCocycle(file, mode);
    if (fittingCmd->parsed()) return cmdFitting(file);
    if (simpleCmd->parsed()) return cmdSimpleCheck(file);
    if (sl2->parsed()) return cmdExampleSl2(etaStr, outFile);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
