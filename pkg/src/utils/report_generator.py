# src/utils/report_generator.py
"""
Report Generation Utility

Terminal shows status lines only; full scan details go to
JSON report files (and optionally CSV / Markdown next to them).
"""
import json
import os
from datetime import datetime
from typing import Optional

from src.quasipos.question8 import ScanReport


class ReportGenerator:
    """
    Writes report files under ``output.reports_dir``.
    Follows the principle: Terminal = Status, Reports = Details
    """

    def __init__(self, output_config: dict, project_root: Optional[str] = None):
        """
        Args:
            output_config: ``output`` section of the configuration
            project_root: Project root directory (auto-detected if None)
        """
        self.config = output_config or {}

        if project_root is None:
            self.project_root = os.path.abspath(
                os.path.join(os.path.dirname(__file__), '..', '..')
            )
        else:
            self.project_root = project_root

        self.verbose = self.config.get('verbose', False)
        self.quiet = self.config.get('quiet', False)

    def _status(self, message: str):
        if not self.quiet:
            print(message)

    def _reports_path(self, report_type: str) -> Optional[str]:
        reports_dir = self.config.get('reports_dir', 'outputs/reports')
        reports_path = os.path.join(self.project_root, reports_dir, report_type)
        try:
            os.makedirs(reports_path, exist_ok=True)
        except OSError as e:
            self._status(f"   ⚠️  Warning: Could not create reports directory: {e}")
            return None
        return reports_path

    def _write_json(self, report: dict, path: str) -> Optional[str]:
        try:
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(report, f, indent=2, ensure_ascii=False)
            self._status(f"   📊 Report saved: {os.path.basename(path)}")
            return path
        except OSError as e:
            self._status(f"   ⚠️  Warning: Could not save report: {e}")
            return None

    def save_scan_report(
        self,
        config: dict,
        report: ScanReport,
        corpus_info: dict,
        output_path: Optional[str] = None,
    ) -> Optional[str]:
        """
        Save the full scan report.

        Args:
            config: Full configuration dictionary
            report: Scan result
            corpus_info: Where the entries came from and how many were skipped
            output_path: Explicit file path; a timestamped file otherwise

        Returns:
            Path to saved report file
        """
        if not self.config.get('save_execution_report', True) and output_path is None:
            return None

        body = {
            'report_metadata': {
                'generated_at': datetime.now().isoformat(),
                'report_type': 'question8_scan',
                'config_name': config.get('name', 'Unnamed'),
            },
            'configuration': {
                'name': config.get('name', 'Unnamed'),
                'description': config.get('description', ''),
                'version': config.get('version', '1.0'),
                'scan': config.get('scan', {}),
            },
            'corpus': corpus_info,
            **report.to_dict(),
        }

        if output_path is None:
            reports_path = self._reports_path('question8')
            if reports_path is None:
                return None
            timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
            output_path = os.path.join(reports_path, f'scan_{timestamp}.json')
        else:
            os.makedirs(os.path.dirname(os.path.abspath(output_path)), exist_ok=True)
        saved = self._write_json(body, output_path)

        if saved and self.config.get('save_records_csv', False):
            csv_path = os.path.splitext(saved)[0] + '.csv'
            report.to_frame().to_csv(csv_path, index=False)
            self._status(f"   📄 Records saved: {os.path.basename(csv_path)}")
        return saved

    def print_minimal_summary(self, summary: dict):
        """Print minimal scan summary to terminal (status only)."""
        status = "✅" if summary.get('violations', 0) == 0 else "❌"
        print(
            f"   {status} {summary.get('evaluated', 0)}/{summary.get('total', 0)} evaluated, "
            f"{summary.get('violations', 0)} violations, {summary.get('errors', 0)} errors, "
            f"{summary.get('skipped', 0)} skipped"
        )
        if self.verbose and summary.get('tree_dependent'):
            self._status(f"   ⚠️  {summary['tree_dependent']} entries with spanning-tree dependent counts")


def create_report_generator(config: dict) -> ReportGenerator:
    """
    Factory function to create report generator from config.

    Args:
        config: Full configuration dictionary

    Returns:
        ReportGenerator instance
    """
    output_config = config.get('output', {})
    return ReportGenerator(output_config)
