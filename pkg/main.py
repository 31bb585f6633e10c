"""
ntree-qi - quasi-isometry classification of right-angled n-tree groups

Main application entry point (same as the `ntree-qi` console script).
"""

from ntree_qi.cli import main


if __name__ == "__main__":
    main()
