// SPDX-License-Identifier: Apache-2.0
//
// indoorpl: indoor path loss modelling and calibration for the 2.4 GHz ISM band
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "indoorpl/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace indoorpl
{

using nlohmann::json;

namespace
{

json fit_json(const FitResult &f)
{
    return {{"parameter", f.parameter_name},
            {"estimate", f.estimate},
            {"residual_rms_db", f.residual_rms_db},
            {"points", f.sample_count}};
}

std::string fixed(double v, int precision = 4)
{
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(precision) << v;
    return ss.str();
}

} // namespace

void write_report_text(std::ostream &os, const AnalysisReport &r)
{
    os << "plan: " << r.plan_name << '\n';
    if (r.channel)
        os << "channel: " << *r.channel << '\n';
    os << "frequency: " << fixed(r.frequency_mhz, 1) << " MHz\n";
    if (!r.scenario.empty())
        os << "scenario: " << r.scenario << '\n';
    os << "records: " << r.record_count << ", aggregated points: " << r.point_count << '\n';

    for (const auto &f : r.fits)
        os << "fit " << f.parameter_name << " = " << fixed(f.estimate) << " (residual rms " << fixed(f.residual_rms_db)
           << " dB over " << f.sample_count << " points)\n";

    if (!r.obstacle_fits.empty())
    {
        os << "\nN_T by obstacle count\n";
        os << std::left << std::setw(12) << "obstacles" << std::setw(12) << "N_T" << std::setw(16) << "rms [dB]"
           << "points\n";
        for (const auto &f : r.obstacle_fits)
        {
            os << std::left << std::setw(12) << f.obstacle_count;
            if (f.fit)
                os << std::setw(12) << fixed(f.fit->estimate) << std::setw(16) << fixed(f.fit->residual_rms_db)
                   << f.fit->sample_count << '\n';
            else
                os << "skipped: " << f.note << '\n';
        }
    }

    if (r.errors)
    {
        os << "\nresidual mean " << fixed(r.errors->mean_db) << " dB, std " << fixed(r.errors->std_dev_db) << " dB (n="
           << r.errors->n << ")\n";
    }

    if (r.comparison)
    {
        os << '\n' << std::left << std::setw(16) << "model" << std::setw(14) << "MSE [dB^2]" << "bias [dB]\n";
        for (const auto &s : r.comparison->scores)
            os << std::left << std::setw(16) << s.model << std::setw(14) << fixed(s.mse_db2) << fixed(s.bias_db) << '\n';
        os << "winner: " << r.comparison->winner << '\n';
    }
}

std::string report_to_json(const AnalysisReport &r)
{
    json doc;
    doc["plan"] = r.plan_name;
    doc["channel"] = r.channel ? json(*r.channel) : json(nullptr);
    doc["frequency_mhz"] = r.frequency_mhz;
    doc["scenario"] = r.scenario;
    doc["records"] = r.record_count;
    doc["points"] = r.point_count;

    doc["fits"] = json::array();
    for (const auto &f : r.fits)
        doc["fits"].push_back(fit_json(f));

    if (!r.obstacle_fits.empty())
    {
        doc["nt_by_obstacle_count"] = json::array();
        for (const auto &f : r.obstacle_fits)
        {
            json entry = {{"obstacles", f.obstacle_count}};
            if (f.fit)
                entry["fit"] = fit_json(*f.fit);
            else
                entry["skipped"] = f.note;
            doc["nt_by_obstacle_count"].push_back(entry);
        }
    }

    if (r.errors)
    {
        json hist = json::array();
        for (const auto &b : r.errors->histogram)
            hist.push_back({{"bin_low", b.low_db}, {"bin_high", b.high_db}, {"count", b.count}});
        doc["error_stats"] = {
            {"mean_db", r.errors->mean_db}, {"std_dev_db", r.errors->std_dev_db}, {"n", r.errors->n}, {"histogram", hist}};
    }

    if (r.comparison)
    {
        json models = json::array();
        for (const auto &s : r.comparison->scores)
            models.push_back({{"name", s.model}, {"mse_db2", s.mse_db2}, {"bias_db", s.bias_db}});
        doc["comparison"] = {{"models", models}, {"winner", r.comparison->winner}};
    }
    return doc.dump(2) + "\n";
}

void write_histogram_csv(std::ostream &os, const ErrorStats &stats)
{
    os << "bin_low,bin_high,count\n";
    for (const auto &b : stats.histogram)
        os << b.low_db << ',' << b.high_db << ',' << b.count << '\n';
}

} // namespace indoorpl
