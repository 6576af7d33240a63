"""
Response Formatter - Turns sweep records and check results into summaries
"""

import math
from typing import Any, Dict, Iterable, List, Mapping, Optional

from .error_handler import ErrorHandler


class ResponseFormatter:
    def __init__(self):
        self.checklist_icons = {
            'completed': '✓',
            'pending': '○',
            'warning': '⚠',
            'error': '✗',
            'info': 'ℹ'
        }

    def summarize_records(self, records: Iterable[Mapping[str, Any]]) -> Dict[str, Any]:
        """Per-column min/max over the populated numeric fields"""
        rows = list(records)
        columns: Dict[str, Dict[str, float]] = {}
        for row in rows:
            for key, value in row.items():
                if value is None or isinstance(value, bool) or not isinstance(value, (int, float)):
                    continue
                if not math.isfinite(value):
                    continue
                stats = columns.setdefault(key, {'min': value, 'max': value})
                stats['min'] = min(stats['min'], value)
                stats['max'] = max(stats['max'], value)
        return {'count': len(rows), 'columns': columns}

    def format_extrema(self, report: Mapping[str, Any]) -> Dict[str, Any]:
        """Checklist for the concurrence/entropy extrema correspondence"""
        checklist = {
            'completed': [],
            'warnings': []
        }
        matched = report.get('matched', 0)
        total = report.get('total', 0)
        if report.get('holds'):
            checklist['completed'].append(
                f"{self.checklist_icons['completed']} {matched}/{total} concurrence extrema "
                f"matched by opposite entropy extrema"
            )
        else:
            checklist['warnings'].append(
                f"{self.checklist_icons['warning']} only {matched}/{total} concurrence extrema matched"
            )
            for miss in report.get('unmatched', []):
                checklist['warnings'].append(
                    f"{self.checklist_icons['error']} no partner for {miss['kind']} at gamma*T={miss['gamma_t']:.6g}"
                )
        unpaired = report.get('unpaired_entropy_minima', 0)
        if unpaired:
            checklist['completed'].append(
                f"{self.checklist_icons['info']} {unpaired} entropy minima without a concurrence maximum"
            )
        return {
            'holds': bool(report.get('holds')),
            'matched': matched,
            'total': total,
            'unpaired_entropy_minima': report.get('unpaired_entropy_minima', 0),
            'checklist': checklist
        }

    def format_verify_results(self, results: Iterable[Mapping[str, Any]]) -> Dict[str, Any]:
        """Checklist of named acceptance checks"""
        lines = []
        failed = []
        rows = list(results)
        for result in rows:
            ok = bool(result.get('passed'))
            icon = self.checklist_icons['completed'] if ok else self.checklist_icons['error']
            detail = result.get('detail')
            line = f"{icon} {result['name']}"
            if detail:
                line += f": {detail}"
            lines.append(line)
            if not ok:
                failed.append(result['name'])
        return {
            'all_passed': not failed and bool(rows),
            'checks': lines,
            'failed': failed
        }

    def format_error(self, analysis: Mapping[str, Any]) -> Dict[str, Any]:
        """Error response in the shape the MCP tools return"""
        return {
            'status': 'error',
            'error_type': analysis.get('error_type', 'UnknownError'),
            'message': analysis.get('message', ''),
            'details': analysis.get('details', {}),
            'suggestions': analysis.get('suggestions', []),
            'exit_code': analysis.get('exit_code')
        }

    def format_exception(self, error: BaseException) -> Dict[str, Any]:
        return self.format_error(ErrorHandler().parse_error(error))

    def render_summary(self, summary: Mapping[str, Any], title: Optional[str] = None) -> List[str]:
        """Plain text lines for terminal output"""
        lines = []
        if title:
            lines.append(f"{self.checklist_icons['completed']} {title} ({summary.get('count', 0)} records)")
        for name, stats in summary.get('columns', {}).items():
            lines.append(f"  {name}: min={stats['min'] + 0.0:.6g} max={stats['max'] + 0.0:.6g}")
        return lines

    def render_error(self, analysis: Mapping[str, Any]) -> List[str]:
        lines = [f"{self.checklist_icons['error']} {analysis.get('error_type')}: {analysis.get('message')}"]
        for suggestion in analysis.get('suggestions', []):
            lines.append(f"  {self.checklist_icons['info']} {suggestion}")
        return lines
