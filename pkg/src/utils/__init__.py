"""
Utils Package: report files and Markdown rendering.
"""

from .report_generator import ReportGenerator, create_report_generator
from .json_to_md import scan_report_to_markdown, write_markdown

__all__ = [
    'ReportGenerator', 'create_report_generator',
    'scan_report_to_markdown', 'write_markdown',
]
