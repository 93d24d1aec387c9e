"""
GdmaLab 测试模块

单元测试、属性测试与统计测试。
"""
