"""
Verification Tools - Run the acceptance checks from the MCP server
"""

from typing import Any, Dict, List, Optional


def register(mcp):
    """Register verification tools with the MCP server"""

    @mcp.tool()
    def dephasing_verify(checks: Optional[List[str]] = None, tolerance_scale: float = 1.0) -> Dict[str, Any]:
        """
        Run the named acceptance checks, or all of them.

        USAGE: Pass a single cheap check such as "werner" for a quick sanity run;
        the full suite takes about a minute.

        Args:
            checks: Check names (dichotomy, x-closed-forms, propagator, phi-oscillation, psi-separable, extrema,
                werner, ghz-structure, eraser-closed-form, remote-control, conservation)
            tolerance_scale: Multiplier applied to every tolerance

        Returns:
            Checklist of results and the names of failed checks
        """
        from ..cli.verify import run_checks
        from ..handlers import ResponseFormatter

        formatter = ResponseFormatter()
        try:
            results = run_checks(checks, tolerance_scale)
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            return formatter.format_exception(exc)

        summary = formatter.format_verify_results(r.as_dict() for r in results)
        return {
            'status': 'success',
            'all_passed': summary['all_passed'],
            'checks': summary['checks'],
            'failed': summary['failed'],
            'results': [r.as_dict() for r in results]
        }
