#include "lpds/validator.hpp"

#include <algorithm>

#include "json.hpp"
#include "lpds/version.hpp"

namespace lpds {

namespace {

void add(std::vector<Diagnostic>& out, std::string_view code, std::string path,
         std::string message, std::optional<std::string> hint = std::nullopt) {
  out.push_back(make_diagnostic(code, std::move(path), std::move(message), std::move(hint)));
}

std::string join_path(std::initializer_list<std::string_view> parts) {
  std::string p;
  for (auto part : parts) {
    if (!p.empty()) p += '/';
    p += part;
  }
  return p;
}

void check_file(const FileRecord& rec, std::vector<Diagnostic>& out) {
  if (!parse_ok(rec.name)) {
    const auto& e = std::get<NameError>(rec.name);
    switch (e.kind) {
      case NameErrorKind::UppercaseKey:
      case NameErrorKind::InvalidKey:
        add(out, codes::InvalidEntityKey, rec.relative_path, e.message,
            "entity keys are lowercase alphanumeric tokens");
        break;
      case NameErrorKind::DuplicateKey:
        add(out, codes::DuplicateEntityKey, rec.relative_path, e.message,
            "each entity key may appear once per filename");
        break;
      default:
        add(out, codes::UnparseableName, rec.relative_path,
            std::string(to_string(e.kind)) + ": " + e.message,
            "expected part-<label>_task-<label>[_<key>-<value>][_<suffix>].<extension>");
        break;
    }
    return;
  }

  const auto& name = std::get<LpdsName>(rec.name);
  for (auto d : validate_name(name, NameProfile::RawData)) {
    d.path = rec.relative_path;
    out.push_back(std::move(d));
  }

  if (const Entity* part = name.find("part"); part && part->value != rec.participant_label) {
    add(out, codes::PartLabelMismatch, rec.relative_path,
        "part entity 'part-" + part->value + "' does not match participant folder 'part-" +
            rec.participant_label + "'",
        "rename the file or move it to the matching participant folder");
  }
  if (const Entity* ses = name.find("ses")) {
    if (!rec.session_label) {
      add(out, codes::SesEntityOutsideSession, rec.relative_path,
          "ses entity 'ses-" + ses->value + "' but the file is not inside a session folder",
          "place the file under participants/part-<label>/ses-" + ses->value + "/");
    } else if (ses->value != *rec.session_label) {
      add(out, codes::SesLabelMismatch, rec.relative_path,
          "ses entity 'ses-" + ses->value + "' does not match session folder 'ses-" +
              *rec.session_label + "'",
          "rename the file or move it to the matching session folder");
    }
  }
}

void check_task_dir(const TaskDir& task, const std::string& parent_path,
                    std::vector<Diagnostic>& out) {
  for (const auto& sub : task.subdirs) {
    add(out, codes::SubdirInTaskDir, join_path({parent_path, task.name, sub}),
        "task directories should contain only files, found subdirectory '" + sub + "'");
  }
  for (const auto& f : task.files) check_file(f, out);
}

}  // namespace

ValidationReport validate_tree(const ProjectTree& tree, bool strict) {
  ValidationReport report;
  report.profile_version = kProfileVersion;
  report.strict = strict;
  auto& out = report.diagnostics;

  if (!tree.has_participants_dir) {
    add(out, codes::MissingParticipantsDir, "participants",
        "missing the mandatory participants/ directory",
        "create <root>/participants and organise data by participant inside it");
  }

  for (const auto& d : tree.invalid_participant_dirs) {
    add(out, codes::BadParticipantDirName, join_path({"participants", d}),
        "directory '" + d + "' does not match part-<label>",
        "participant folders are named part-<label> with an alphanumeric label");
  }
  for (const auto& f : tree.participants_stray_files) {
    add(out, codes::UnexpectedFilePlacement, join_path({"participants", f}),
        "unexpected file directly under participants/",
        "data files belong inside task directories");
  }

  bool any_longitudinal = false;
  bool any_flat = false;

  for (const auto& part : tree.participants) {
    const std::string ppath = join_path({"participants", part.dir_name});
    if (part.longitudinal()) any_longitudinal = true;
    if (!part.task_dirs.empty()) any_flat = true;

    if (part.sessions.empty() && part.task_dirs.empty()) {
      add(out, codes::NoTaskDir, ppath, "participant has no task directory",
          "create at least one task/context subdirectory (e.g. interview)");
    }
    if (!part.sessions.empty() && !part.task_dirs.empty()) {
      add(out, codes::MixedLongitudinal, ppath,
          "participant mixes session folders and direct task directories");
    }
    for (const auto& f : part.stray_files) {
      add(out, codes::UnexpectedFilePlacement, join_path({ppath, f}),
          "unexpected file directly inside a participant folder",
          "only participant_metadata.json belongs here; data files go to task directories");
    }
    for (const auto& task : part.task_dirs) check_task_dir(task, ppath, out);

    for (const auto& ses : part.sessions) {
      const std::string spath = join_path({ppath, "ses-" + ses.label});
      if (!ses.label_valid) {
        add(out, codes::BadSessionDirName, spath,
            "session directory label 'ses-" + ses.label + "' is not alphanumeric",
            "session folders are named ses-<label> with an alphanumeric label");
      }
      if (ses.task_dirs.empty()) {
        add(out, codes::NoTaskDir, spath, "session has no task directory",
            "create at least one task/context subdirectory (e.g. interview)");
      }
      for (const auto& f : ses.stray_files) {
        add(out, codes::UnexpectedFilePlacement, join_path({spath, f}),
            "unexpected file directly inside a session folder",
            "data files go to task directories");
      }
      for (const auto& task : ses.task_dirs) check_task_dir(task, spath, out);
    }
  }

  if (any_longitudinal && any_flat) {
    add(out, codes::MixedLongitudinal, "participants",
        "dataset mixes longitudinal (session-based) and non-longitudinal participants");
  }

  for (const auto& link : tree.symlinks_skipped) {
    add(out, codes::SymlinkSkipped, link, "symbolic link skipped during scan",
        "replace the link with a regular file or directory");
  }

  if (tree.has_participants_dir) {
    if (!tree.has_readme) {
      add(out, codes::MissingSidecar, "README", "optional sidecar README not found");
    }
    if (!tree.has_dataset_description) {
      add(out, codes::MissingSidecar, "dataset_description.json",
          "optional sidecar dataset_description.json not found");
    }
  }

  if (strict) {
    for (auto& d : report.diagnostics) {
      if (d.severity == Severity::Warning) d.severity = Severity::Error;
    }
  }

  sort_diagnostics(report.diagnostics);
  for (const auto& d : report.diagnostics) {
    switch (d.severity) {
      case Severity::Error: ++report.error_count; break;
      case Severity::Warning: ++report.warning_count; break;
      case Severity::Info: ++report.info_count; break;
    }
  }
  report.tree_summary.participants = static_cast<int>(tree.participants.size());
  report.tree_summary.sessions = tree.session_count();
  report.tree_summary.files = tree.file_count();
  return report;
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::string render_report(const ValidationReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["lpds_validator_version"] = kToolVersion;
    j["summary"] = {{"profile_version", report.profile_version},
                    {"strict", report.strict},
                    {"valid", report.is_valid()},
                    {"errors", report.error_count},
                    {"warnings", report.warning_count},
                    {"info", report.info_count},
                    {"participants", report.tree_summary.participants},
                    {"sessions", report.tree_summary.sessions},
                    {"files", report.tree_summary.files}};
    j["diagnostics"] = nlohmann::ordered_json::array();
    for (const auto& d : report.diagnostics) {
      nlohmann::ordered_json jd;
      jd["code"] = d.code;
      jd["severity"] = std::string(to_string(d.severity));
      jd["path"] = d.path;
      jd["message"] = d.message;
      if (d.fix_hint) jd["fix_hint"] = *d.fix_hint;
      j["diagnostics"].push_back(std::move(jd));
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  if (report.diagnostics.empty()) {
    out += "OK: 0 errors, 0 warnings\n";
  } else {
    for (const auto& d : report.diagnostics) {
      out += to_string(d.severity);
      out += ' ';
      out += d.code;
      out += ' ';
      out += d.path;
      out += ": ";
      out += d.message;
      if (d.fix_hint) {
        out += " [hint: ";
        out += *d.fix_hint;
        out += ']';
      }
      out += '\n';
    }
    out += "summary: " + std::to_string(report.error_count) + " errors, " +
           std::to_string(report.warning_count) + " warnings, " +
           std::to_string(report.info_count) + " info\n";
  }
  out += "tree: " + std::to_string(report.tree_summary.participants) + " participants, " +
         std::to_string(report.tree_summary.sessions) + " sessions, " +
         std::to_string(report.tree_summary.files) + " files\n";
  return out;
}

}  // namespace lpds
